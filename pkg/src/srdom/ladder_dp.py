"""Column-by-column dynamic program for ladders and circular ladders.

Every constraint is between a vertex and its closed neighborhood, which in a
ladder spans at most three consecutive columns. A column's state therefore
only needs its two labels, each vertex's closed-neighborhood sum over the
columns seen so far, and whether each ``-1`` vertex already has a ``2``
neighbor. A column's constraints are settled once the next column is placed.

The automaton has at most 90 states, so an open ladder is solved in
``O(n)`` time. For the circular ladder the ring cost through every
boundary state comes from a min-plus power of the transfer matrix. One
linear pass from the best boundary then recovers the witness.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InvalidParameter
from .graphs import Family, FamilySpec, family
from .solver import Certificate, Method, SearchStats, _certified
from .srdf import LABELS, Labeling

INF = kernels.INF

# column label pairs (row 1, row 2) in lexicographic order under -1 < 1 < 2
COLUMNS = tuple(itertools.product(LABELS, LABELS))


@dataclass(frozen=True)
class ColumnState:
    labels: tuple[int, int]
    partial: tuple[int, int]
    seen_two: tuple[bool, bool]

    @classmethod
    def first(cls, labels):
        a, b = labels
        return cls(
            labels=(a, b),
            partial=(a + b, a + b),
            seen_two=(a == -1 and b == 2, b == -1 and a == 2),
        )

    @classmethod
    def after(cls, left, labels):
        a, b = labels
        return cls(
            labels=(a, b),
            partial=(a + b + left[0], a + b + left[1]),
            seen_two=(a == -1 and (b == 2 or left[0] == 2), b == -1 and (a == 2 or left[1] == 2)),
        )

    def viable(self) -> bool:
        # best case the next column contributes 2 to each row
        return all(p + 2 >= 1 for p in self.partial)

    def accepts(self, right) -> bool:
        """Both vertices satisfied once ``right`` is placed next to them."""
        for r in (0, 1):
            if self.partial[r] + right[r] < 1:
                return False
            if self.labels[r] == -1 and not self.seen_two[r] and right[r] != 2:
                return False
        return True

    def closed(self) -> bool:
        """Both vertices satisfied with no further column."""
        for r in (0, 1):
            if self.partial[r] < 1:
                return False
            if self.labels[r] == -1 and not self.seen_two[r]:
                return False
        return True


@dataclass(frozen=True)
class Automaton:
    states: tuple[ColumnState, ...]
    succ: np.ndarray          # (S, 9) next state id or -1
    colw: np.ndarray          # (9,) column weights
    init: np.ndarray          # (9,) state of a first column, or -1
    final_cost: np.ndarray    # (S,) 0 if the state may end an open ladder
    pair_state: dict          # (left pair index, pair index) -> state id

    @property
    def size(self) -> int:
        return len(self.states)


@lru_cache(maxsize=None)
def automaton() -> Automaton:
    ids: dict[ColumnState, int] = {}
    states: list[ColumnState] = []

    def intern(st):
        if not st.viable():
            return -1
        if st not in ids:
            ids[st] = len(states)
            states.append(st)
        return ids[st]

    init = np.array([intern(ColumnState.first(x)) for x in COLUMNS], dtype=np.int32)
    pair_state = {}
    for i, left in enumerate(COLUMNS):
        for j, x in enumerate(COLUMNS):
            sid = intern(ColumnState.after(left, x))
            if sid >= 0:
                pair_state[i, j] = sid

    S = len(states)
    succ = np.full((S, 9), -1, dtype=np.int32)
    for s, st in enumerate(states):
        for j, x in enumerate(COLUMNS):
            if st.accepts(x):
                succ[s, j] = pair_state.get((COLUMNS.index(st.labels), j), -1)
    colw = np.array([sum(x) for x in COLUMNS], dtype=np.int32)
    final_cost = np.array([0 if st.closed() else INF for st in states], dtype=np.int32)
    return Automaton(tuple(states), succ, colw, init, final_cost, pair_state)


def _labels_from_columns(xs) -> Labeling:
    return Labeling(tuple(v for x in xs for v in COLUMNS[int(x)]))


def solve_ladder_dp(n: int, impl: str | None = None) -> Certificate:
    """Exact value of the ladder ``P2 x Pn`` with its lexicographically
    smallest optimal labeling."""
    if n < 2:
        raise InvalidParameter(f"ladder requires n >= 2, got {n}")
    t0 = time.perf_counter()
    A = automaton()
    opt, xs = kernels.sweep(A.succ, A.colw, A.init, A.final_cost, n, impl=impl)
    if opt is None:
        raise AssertionError("ladder DP found no feasible labeling")
    return _certified(
        Certificate(
            graph=family(FamilySpec(Family.LADDER, n)),
            labeling=_labels_from_columns(xs),
            weight=int(opt),
            claimed_optimal=True,
            method=Method.LADDER_DP,
            stats=SearchStats(n * A.size, time.perf_counter() - t0),
        )
    )


def transfer_matrix(A: Automaton | None = None) -> np.ndarray:
    """Min-plus transfer matrix: entry ``[s, t]`` is the weight of the column
    that moves state ``s`` to ``t`` (``INF`` if impossible)."""
    A = A or automaton()
    T = np.full((A.size, A.size), INF, dtype=np.int64)
    for s in range(A.size):
        for x in range(9):
            t = A.succ[s, x]
            if t >= 0:
                T[s, t] = min(T[s, t], A.colw[x])
    return T


def minplus(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    R = (P[:, :, None] + Q[None, :, :]).min(axis=1)
    # INF plus a negative weight must stay INF
    R[R >= INF // 2] = INF
    return R


def minplus_power(T: np.ndarray, k: int) -> np.ndarray:
    result = None
    base = T
    while k:
        if k & 1:
            result = base if result is None else minplus(result, base)
        k >>= 1
        if k:
            base = minplus(base, base)
    return result


def ring_costs(n: int) -> dict[tuple[int, int], int]:
    """Cheapest ring of ``n`` columns through each boundary ``(column n, column 1)``."""
    A = automaton()
    diag = np.diagonal(minplus_power(transfer_matrix(A), n))
    return {key: int(diag[sid]) for key, sid in A.pair_state.items() if diag[sid] < INF}


def solve_circular_ladder_dp(n: int, impl: str | None = None) -> Certificate:
    """Exact value of the circular ladder ``Cn x P2``.

    The witness uses the smallest column-1 pair, then the smallest column-n
    pair, that admits an optimal ring, and is lexicographically smallest in
    between.
    """
    if n < 3:
        raise InvalidParameter(f"circular ladder requires n >= 3, got {n}")
    t0 = time.perf_counter()
    A = automaton()
    costs = ring_costs(n)
    opt = min(costs.values())
    last, first = min((a, z) for (z, a), c in costs.items() if c == opt)[::-1]
    start = A.pair_state[last, first]

    init = np.full(9, -1, dtype=np.int32)
    init[first] = start
    final_cost = np.where(A.succ[:, first] == start, 0, INF).astype(np.int32)
    total, xs = kernels.sweep(A.succ, A.colw, init, final_cost, n, impl=impl)
    if total != opt or int(xs[-1]) != last:
        raise AssertionError("ring reconstruction disagrees with the transfer-matrix optimum")
    return _certified(
        Certificate(
            graph=family(FamilySpec(Family.CIRCULAR_LADDER, n)),
            labeling=_labels_from_columns(xs),
            weight=int(opt),
            claimed_optimal=True,
            method=Method.LADDER_DP,
            stats=SearchStats(n * A.size, time.perf_counter() - t0),
        )
    )
