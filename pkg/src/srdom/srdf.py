"""Labelings ``V -> {-1, 1, 2}`` and the two signed Roman domination checks."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput
from .graphs import Graph, coord_to_index, index_to_coord

LABELS = (-1, 1, 2)


@dataclass(frozen=True)
class Labeling:
    """A total assignment of labels, stored in linear vertex-index order."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        bad = [x for x in labels if x not in LABELS]
        if bad:
            raise InvalidInput(f"labels must be in {{-1, 1, 2}}, got {bad[0]}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "Labeling":
        return cls((value,) * n)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def replace(self, index: int, value: int) -> "Labeling":
        labels = list(self.labels)
        labels[index] = value
        return Labeling(tuple(labels))


def as_labeling(obj: Labeling | Iterable[int]) -> Labeling:
    return obj if isinstance(obj, Labeling) else Labeling(tuple(obj))


def weight(labeling: Labeling | Sequence[int]) -> int:
    return sum(as_labeling(labeling).labels)


def partition_counts(labeling: Labeling | Sequence[int]) -> tuple[int, int, int]:
    """Sizes of the ``-1``, ``1`` and ``2`` classes."""
    labels = as_labeling(labeling).labels
    return labels.count(-1), labels.count(1), labels.count(2)


@dataclass(frozen=True)
class ValidationReport:
    """Per-vertex diagnostics for both conditions.

    ``has_two_neighbor[v]`` is only meaningful where the label is -1; for
    other vertices it is reported as True.
    """

    neighborhood_sums: tuple[int, ...]
    has_two_neighbor: tuple[bool, ...]
    sum_violations: tuple[int, ...]
    two_violations: tuple[int, ...]

    @property
    def valid(self) -> bool:
        return not self.sum_violations and not self.two_violations

    def __bool__(self) -> bool:
        return self.valid


def validate(g: Graph, labeling: Labeling | Sequence[int]) -> ValidationReport:
    labels = as_labeling(labeling).labels
    if len(labels) != g.vertex_count:
        raise InvalidInput(
            f"labeling has {len(labels)} entries, graph has {g.vertex_count} vertices"
        )
    sums, ok_two = [], []
    for v, nb in enumerate(g.adjacency):
        sums.append(labels[v] + sum(labels[u] for u in nb))
        ok_two.append(labels[v] != -1 or any(labels[u] == 2 for u in nb))
    return ValidationReport(
        neighborhood_sums=tuple(sums),
        has_two_neighbor=tuple(ok_two),
        sum_violations=tuple(v for v, s in enumerate(sums) if s < 1),
        two_violations=tuple(v for v, ok in enumerate(ok_two) if not ok),
    )


def is_srdf(g: Graph, labeling: Labeling | Sequence[int]) -> bool:
    return validate(g, labeling).valid


# -- labeling text format -------------------------------------------------

_COORD_LINE = re.compile(r"^\(\s*([12])\s*,\s*(\d+)\s*\)\s*=\s*(-?\d+)$")


def format_labeling(labeling: Labeling, coords: bool = False) -> str:
    """One line per vertex: ``<index> <label>`` or ``(row,col)=label``."""
    if coords:
        lines = (f"{index_to_coord(v)}={x}" for v, x in enumerate(labeling))
    else:
        lines = (f"{v} {x}" for v, x in enumerate(labeling))
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    """Parse either line form; every index ``0..n-1`` must appear exactly once."""
    entries: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _COORD_LINE.match(line)
        try:
            if m:
                v, x = coord_to_index(int(m[1]), int(m[2])), int(m[3])
            else:
                v_s, x_s = line.split()
                v, x = int(v_s), int(x_s)
        except ValueError:
            raise InvalidInput(f"line {lineno}: cannot parse {line!r}") from None
        if x not in LABELS:
            raise InvalidInput(f"line {lineno}: label {x} not in {{-1, 1, 2}}")
        if v < 0 or v in entries:
            raise InvalidInput(f"line {lineno}: bad or repeated vertex index {v}")
        entries[v] = x
    if sorted(entries) != list(range(len(entries))):
        raise InvalidInput("labeling indices are not contiguous from 0")
    return Labeling(tuple(entries[v] for v in range(len(entries))))


def read_labeling(path: str) -> Labeling:
    with open(path, encoding="utf-8") as fh:
        return parse_labeling(fh.read())


def write_labeling(labeling: Labeling, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_labeling(labeling))
