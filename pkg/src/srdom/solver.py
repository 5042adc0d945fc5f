"""Exact signed Roman domination numbers for small graphs.

Two independent engines: :func:`solve_exhaustive` enumerates all ``3**n``
labelings and serves as the oracle; :func:`solve_branch_bound` is the
workhorse for graphs up to about forty vertices.
"""
from __future__ import annotations

import enum
import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import Infeasible, InvalidInput, SizeLimitError
from .formulas import lower_bound_degree, lower_bound_size
from .graphs import Graph
from .srdf import Labeling, ValidationReport, validate, weight

EXHAUSTIVE_CAP = 16
BRANCH_BOUND_CAP = 40


class Method(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_BOUND = "branch-bound"
    LADDER_DP = "ladder-dp"
    CONSTRUCTION = "construction"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class Certificate:
    """A labeling of ``graph`` together with how it was obtained.

    ``claimed_optimal`` is True only when an exact engine proved no lighter
    labeling exists.
    """

    graph: Graph
    labeling: Labeling
    weight: int
    claimed_optimal: bool
    method: Method
    stats: SearchStats = field(default_factory=SearchStats)
    source: str = ""

    def __post_init__(self):
        if len(self.labeling) != self.graph.vertex_count:
            raise InvalidInput("certificate labeling does not match the graph")
        if weight(self.labeling) != self.weight:
            raise InvalidInput(
                f"certificate weight {self.weight} != labeling weight {weight(self.labeling)}"
            )

    @property
    def descriptor(self) -> str:
        return self.graph.descriptor()

    def verify(self) -> ValidationReport:
        return validate(self.graph, self.labeling)


def _certified(cert: Certificate) -> Certificate:
    # engines must never hand out an invalid witness
    report = cert.verify()
    if not report.valid:
        raise AssertionError(
            f"{cert.method} produced an invalid labeling: "
            f"sum violations {report.sum_violations}, two violations {report.two_violations}"
        )
    return cert


def _check_cap(g: Graph, cap: int, method: str) -> None:
    if g.vertex_count > cap:
        raise SizeLimitError(g.vertex_count, cap, method)


def solve_exhaustive(g: Graph, cap: int = EXHAUSTIVE_CAP, impl: str | None = None) -> Certificate:
    """Enumerate every labeling; the witness is the lexicographically smallest
    optimum under ``-1 < 1 < 2``."""
    _check_cap(g, cap, "exhaustive")
    t0 = time.perf_counter()
    offsets, nbrs = g.csr
    best, labels, visited = kernels.exhaustive(offsets, nbrs, impl=impl)
    if best is None:
        raise Infeasible(f"no valid labeling for {g!r}")
    return _certified(
        Certificate(
            graph=g,
            labeling=Labeling(tuple(int(x) for x in labels)),
            weight=int(best),
            claimed_optimal=True,
            method=Method.EXHAUSTIVE,
            stats=SearchStats(int(visited), time.perf_counter() - t0),
        )
    )


def branch_order(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by index."""
    return sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))


def size_floor(g: Graph) -> int:
    """Whole-graph lower bound used to stop the search early."""
    if g.vertex_count == 0:
        return 0
    bounds = [lower_bound_degree(g), lower_bound_size(g)]
    return max(math.ceil(b) for b in bounds if b is not None)


def solve_branch_bound(
    g: Graph,
    cap: int = BRANCH_BOUND_CAP,
    workers: int = 1,
    deterministic: bool = False,
    impl: str | None = None,
) -> Certificate:
    """Exact optimum by depth-first branch-and-bound.

    The optimum is found branching on high-degree vertices first; a second,
    tightly bounded pass in index order then extracts the canonical
    (lexicographically smallest) witness, so the result does not depend on
    ``workers``.
    """
    _check_cap(g, cap, "branch-bound")
    t0 = time.perf_counter()
    n = g.vertex_count
    offsets, nbrs = g.csr
    floor = size_floor(g)
    if deterministic:
        workers = 1

    order = branch_order(g)
    if workers > 1 and n > 2:
        best, nodes = _parallel_optimum(offsets, nbrs, order, n, floor, workers, impl)
    else:
        best, _, nodes = kernels.branch_bound(offsets, nbrs, order, [], n + 1, floor, impl=impl)
    if best > n:
        raise Infeasible(f"no valid labeling for {g!r}")

    # canonical witness: first labeling in index order reaching the optimum
    _, labels, more = kernels.branch_bound(offsets, nbrs, range(n), [], best + 1, best, impl=impl)
    if labels is None:
        raise AssertionError("canonical pass failed to reproduce the optimum")
    return _certified(
        Certificate(
            graph=g,
            labeling=Labeling(tuple(int(x) for x in labels)),
            weight=int(best),
            claimed_optimal=True,
            method=Method.BRANCH_BOUND,
            stats=SearchStats(int(nodes + more), time.perf_counter() - t0),
        )
    )


# -- multi-worker search --------------------------------------------------

_shared_best = None


def _init_worker(shared):
    global _shared_best
    _shared_best = shared


def _search_prefix(args):
    offsets, nbrs, order, prefix, floor, impl = args
    with _shared_best.get_lock():
        incumbent = _shared_best.value
    if incumbent <= floor:
        return incumbent, 0
    best, labels, nodes = kernels.branch_bound(offsets, nbrs, order, prefix, incumbent, floor, impl=impl)
    if labels is not None:
        with _shared_best.get_lock():
            if best < _shared_best.value:
                _shared_best.value = best
    return best, nodes


def _parallel_optimum(offsets, nbrs, order, n, floor, workers, impl):
    # split the top levels of the tree into 3**depth independent subproblems
    depth = min(n - 1, max(1, math.ceil(math.log(8 * workers, 3))))
    grid = np.array(np.meshgrid(*[(-1, 1, 2)] * depth, indexing="ij")).reshape(depth, -1).T
    ctx = multiprocessing.get_context("fork")
    shared = ctx.Value("i", n + 1)
    jobs = [(offsets, nbrs, order, prefix, floor, impl) for prefix in grid]
    with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker, initargs=(shared,)) as pool:
        results = list(pool.map(_search_prefix, jobs))
    return min([shared.value] + [b for b, _ in results]), sum(k for _, k in results)
