"""Undirected simple graphs and the graph families studied here.

Vertices are the integers ``0..n-1``. Adjacency lists are sorted tuples, so
two graphs compare equal exactly when their edge sets are equal.

For the two ladder families the vertex ``(row, column)`` (``row`` in
``{1, 2}``, ``column`` in ``1..n``) sits at linear index
``(column - 1) * 2 + (row - 1)``; columns are therefore contiguous pairs,
which is the order the column DP sweeps in.
"""
from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput, InvalidParameter


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    LADDER = "ladder"
    CIRCULAR_LADDER = "circular-ladder"
    LADDER_COMPLEMENT = "ladder-complement"
    CIRCULAR_LADDER_COMPLEMENT = "circular-ladder-complement"

    @property
    def min_n(self) -> int:
        return _MIN_N[self]

    @property
    def has_coords(self) -> bool:
        return self in _LADDER_LIKE

    @property
    def base(self) -> "Family":
        """The family this one is the complement of (or itself)."""
        return {
            Family.LADDER_COMPLEMENT: Family.LADDER,
            Family.CIRCULAR_LADDER_COMPLEMENT: Family.CIRCULAR_LADDER,
        }.get(self, self)

    def __str__(self) -> str:
        return self.value


_MIN_N = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.LADDER: 2,
    Family.CIRCULAR_LADDER: 3,
    Family.LADDER_COMPLEMENT: 2,
    Family.CIRCULAR_LADDER_COMPLEMENT: 3,
}
_LADDER_LIKE = frozenset(
    {
        Family.LADDER,
        Family.CIRCULAR_LADDER,
        Family.LADDER_COMPLEMENT,
        Family.CIRCULAR_LADDER_COMPLEMENT,
    }
)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        try:
            fam = Family(self.family)
        except ValueError:
            raise InvalidParameter(f"unknown family {self.family!r}") from None
        object.__setattr__(self, "family", fam)
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise InvalidParameter(f"n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < fam.min_n:
            raise InvalidParameter(f"{fam} requires n >= {fam.min_n}, got {self.n}")

    def __str__(self) -> str:
        return f"{self.family} {self.n}"


@dataclass(frozen=True)
class VertexCoord:
    row: int
    column: int

    def index(self) -> int:
        return coord_to_index(self.row, self.column)

    def __str__(self) -> str:
        return f"({self.row},{self.column})"


def coord_to_index(row: int, column: int) -> int:
    if row not in (1, 2) or column < 1:
        raise InvalidParameter(f"bad ladder coordinate ({row},{column})")
    return (column - 1) * 2 + (row - 1)


def index_to_coord(index: int) -> VertexCoord:
    if index < 0:
        raise InvalidParameter(f"negative vertex index {index}")
    return VertexCoord(row=index % 2 + 1, column=index // 2 + 1)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph in adjacency-list form.

    ``meta`` records which family (if any) the graph was generated from; it
    is informational and does not take part in equality.
    """

    adjacency: tuple[tuple[int, ...], ...]
    meta: FamilySpec | None = field(default=None, compare=False)

    def __post_init__(self):
        adj = tuple(tuple(sorted(int(u) for u in nb)) for nb in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        check_simple(self)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        meta: FamilySpec | None = None,
    ) -> "Graph":
        if vertex_count < 0:
            raise InvalidParameter("vertex_count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInput(f"edge ({u},{v}) out of range 0..{vertex_count - 1}")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InvalidInput(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(tuple(sorted(nb)) for nb in adj), meta)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted((v, *self.adjacency[v])))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def has_isolated_vertex(self) -> bool:
        return any(not nb for nb in self.adjacency)

    def coord(self, v: int) -> VertexCoord | None:
        if self.meta is None or not self.meta.family.has_coords:
            return None
        return index_to_coord(v)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(offsets, neighbors)`` int32 arrays for the search kernels."""
        offsets = np.zeros(self.vertex_count + 1, dtype=np.int32)
        offsets[1:] = np.cumsum([len(nb) for nb in self.adjacency])
        flat = np.fromiter(
            (u for nb in self.adjacency for u in nb), dtype=np.int32, count=int(offsets[-1])
        )
        return offsets, flat

    def descriptor(self) -> str:
        if self.meta is not None:
            return str(self.meta)
        return "sha256:" + self.digest()[:16]

    def digest(self) -> str:
        return hashlib.sha256(format_edge_list(self).encode()).hexdigest()

    def __repr__(self) -> str:
        tag = f" {self.meta}" if self.meta else ""
        return f"<Graph{tag} |V|={self.vertex_count} |E|={self.edge_count}>"


def check_simple(g: Graph) -> None:
    """Raise InvalidInput unless ``g`` is loop-free, symmetric and simple."""
    n = g.vertex_count
    for v, nb in enumerate(g.adjacency):
        if len(set(nb)) != len(nb):
            raise InvalidInput(f"duplicate neighbor at vertex {v}")
        for u in nb:
            if not 0 <= u < n:
                raise InvalidInput(f"neighbor {u} of {v} out of range")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {v}")
            if v not in g.adjacency[u]:
                raise InvalidInput(f"asymmetric adjacency between {v} and {u}")


def empty(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("n must be non-negative")
    return Graph(tuple(() for _ in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path requires n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete requires n >= 1, got {n}")
    return Graph(tuple(tuple(u for u in range(n) if u != v) for v in range(n)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` lands at index ``b * |V(g)| + a``."""
    ng, nh = g.vertex_count, h.vertex_count
    edges = []
    for b in range(nh):
        for a, a2 in g.edges():
            edges.append((b * ng + a, b * ng + a2))
    for a in range(ng):
        for b, b2 in h.edges():
            edges.append((b * ng + a, b2 * ng + a))
    return Graph.from_edges(ng * nh, edges)


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    adj = []
    for v, nb in enumerate(g.adjacency):
        taken = set(nb)
        adj.append(tuple(u for u in range(n) if u != v and u not in taken))
    return Graph(tuple(adj), g.meta and _complement_meta(g.meta))


def _complement_meta(spec: FamilySpec) -> FamilySpec | None:
    swap = {
        Family.LADDER: Family.LADDER_COMPLEMENT,
        Family.CIRCULAR_LADDER: Family.CIRCULAR_LADDER_COMPLEMENT,
        Family.LADDER_COMPLEMENT: Family.LADDER,
        Family.CIRCULAR_LADDER_COMPLEMENT: Family.CIRCULAR_LADDER,
    }
    fam = swap.get(spec.family)
    return FamilySpec(fam, spec.n) if fam else None


def relabel(g: Graph, new_index: Sequence[int]) -> Graph:
    """Move vertex ``v`` to position ``new_index[v]``."""
    n = g.vertex_count
    if sorted(new_index) != list(range(n)):
        raise InvalidInput("relabel map is not a permutation")
    return Graph.from_edges(n, ((new_index[u], new_index[v]) for u, v in g.edges()))


def with_meta(g: Graph, meta: FamilySpec | None) -> Graph:
    return Graph(g.adjacency, meta)


def family(spec: FamilySpec | Family | str, n: int | None = None) -> Graph:
    """Build a named family graph with coordinate metadata attached."""
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(Family(spec), n)
    fam, n = spec.family, spec.n
    if fam is Family.PATH:
        g = path(n)
    elif fam is Family.CYCLE:
        g = cycle(n)
    elif fam is Family.COMPLETE:
        g = complete(n)
    elif fam is Family.LADDER:
        g = cartesian_product(path(2), path(n))
    elif fam is Family.CIRCULAR_LADDER:
        # product index is row * n + column; move to column-major pairs
        prod = cartesian_product(cycle(n), path(2))
        g = relabel(prod, [(v % n) * 2 + v // n for v in range(2 * n)])
    else:
        g = complement(family(FamilySpec(fam.base, n)))
    return with_meta(g, spec)


def degree_stats(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """``(min degree, max degree, degree sequence)``."""
    if g.vertex_count == 0:
        raise InvalidParameter("degree_stats of the empty graph")
    degs = g.degrees()
    return min(degs), max(degs), degs


# -- edge-list text format --------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise InvalidInput(f"line {lineno}: expected two integers, got {line!r}")
        rows.append(nums)
    if not rows:
        raise InvalidInput("empty edge list: missing header line")
    (n, m), edge_rows = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise InvalidInput("header counts must be non-negative")
    if len(edge_rows) != m:
        raise InvalidInput(f"header declares {m} edges, found {len(edge_rows)}")
    return Graph.from_edges(n, (tuple(r) for r in edge_rows))


def read_edge_list(path_: str) -> Graph:
    with open(path_, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path_: str) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
