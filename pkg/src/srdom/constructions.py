"""Explicit labelings for the four ladder-type families.

Each construction is a list of clauses ``(label, predicate)`` over the
coordinates ``(row, column)``. A vertex takes the label of the first clause
that matches it (all ``-1`` clauses, then ``1``, then ``2``);
:func:`audit_clauses` reports vertices matched by no clause or by clauses
with different labels.

Small cases the general recipes do not cover are stored as literal
labelings (``FIGURES``), in linear vertex order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import ExcludedCase, InvalidParameter
from .graphs import Family, FamilySpec, VertexCoord, family, index_to_coord
from .solver import Certificate, Method
from .srdf import Labeling, weight


@dataclass(frozen=True)
class Clause:
    label: int
    applies: Callable[[int, int, int], bool]
    text: str


LG_CLAUSES = (
    Clause(-1, lambda r, i, n: r == 1 and i % 2 == 1 and not (i == n and n % 4 == 1),
           "(1,i), i odd, except i = n = 1 mod 4"),
    Clause(-1, lambda r, i, n: r == 2 and i >= 3 and i % 2 == 1 and not (i == n and n % 4 == 3),
           "(2,i), i >= 3 odd, except i = n = 3 mod 4"),
    Clause(1, lambda r, i, n: r == 2 and i == 1, "(2,1)"),
    Clause(1, lambda r, i, n: r == 1 and i % 4 == 0, "(1,i), i = 0 mod 4"),
    Clause(1, lambda r, i, n: r == 1 and i == n and n % 4 == 1, "(1,n), n = 1 mod 4"),
    Clause(1, lambda r, i, n: r == 2 and i % 4 == 2, "(2,i), i = 2 mod 4"),
    Clause(1, lambda r, i, n: r == 2 and i == n and n % 4 in (2, 3), "(2,n), n = 2,3 mod 4"),
    Clause(2, lambda r, i, n: r == 1 and i % 4 == 2, "(1,i), i = 2 mod 4"),
    Clause(2, lambda r, i, n: r == 2 and i % 4 == 0, "(2,i), i = 0 mod 4"),
)

LG_COMPLEMENT_CLAUSES = (
    Clause(-1, lambda r, i, n: r == 1 and 2 <= i <= n - 1, "(1,i), 2 <= i <= n-1"),
    Clause(-1, lambda r, i, n: r == 2 and i in (2, n - 1), "(2,2) and (2,n-1)"),
    Clause(1, lambda r, i, n: r == 2 and i not in (2, n - 1), "(2,i), i != 2, n-1"),
    Clause(2, lambda r, i, n: r == 1 and i in (1, n), "(1,1) and (1,n)"),
)

LC_CLAUSES = (
    Clause(-1, lambda r, i, n: r == 1 and i % 2 == 1, "(1,i), i odd"),
    Clause(-1, lambda r, i, n: r == 2 and i >= 3 and i % 2 == 1 and i != n,
           "(2,i), i >= 3 odd, i != n"),
    Clause(1, lambda r, i, n: r == 2 and i == 1, "(2,1)"),
    Clause(1, lambda r, i, n: r == 1 and i % 4 == 0, "(1,i), i = 0 mod 4"),
    Clause(1, lambda r, i, n: r == 2 and i % 4 == 2, "(2,i), i = 2 mod 4"),
    Clause(1, lambda r, i, n: r == 2 and i == n and n % 4 == 3, "(2,n), n = 3 mod 4"),
    Clause(2, lambda r, i, n: r == 1 and i % 4 == 2, "(1,i), i = 2 mod 4"),
    Clause(2, lambda r, i, n: r == 2 and i % 4 == 0, "(2,i), i = 0 mod 4"),
    Clause(2, lambda r, i, n: r == 2 and i == n and n % 4 in (0, 1), "(2,n), n = 0,1 mod 4"),
)

LC_COMPLEMENT_CLAUSES = (
    Clause(-1, lambda r, i, n: r == 1 and i in (1, 4), "(1,1) and (1,4)"),
    Clause(-1, lambda r, i, n: r == 2 and i not in (2, 5), "(2,i), i != 2, 5"),
    Clause(1, lambda r, i, n: r == 1 and 5 <= i <= n, "(1,i), 5 <= i <= n"),
    Clause(1, lambda r, i, n: r == 2 and i == 2, "(2,2)"),
    Clause(2, lambda r, i, n: (r, i) in ((1, 2), (1, 3), (2, 5)), "(1,2), (1,3), (2,5)"),
)

FIGURES = {
    FamilySpec(Family.LADDER_COMPLEMENT, 2): Labeling((2, 2, -1, -1)),
    FamilySpec(Family.LADDER_COMPLEMENT, 3): Labeling((2, 1, 1, 1, -1, -1)),
    FamilySpec(Family.CIRCULAR_LADDER, 5): Labeling((1, 1, -1, -1, 2, 2, -1, -1, 1, 1)),
    FamilySpec(Family.CIRCULAR_LADDER_COMPLEMENT, 3): Labeling((1, 2, -1, -1, 2, 1)),
    FamilySpec(Family.CIRCULAR_LADDER_COMPLEMENT, 4): Labeling((1, 2, -1, 1, -1, -1, 2, 1)),
}


@dataclass(frozen=True)
class ClauseIssue:
    coord: VertexCoord
    labels: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "uncovered" if not self.labels else "conflict"

    def __str__(self) -> str:
        return f"{self.coord}: {self.kind} {list(self.labels)}"


def apply_clauses(clauses, n: int) -> Labeling:
    labels = []
    for v in range(2 * n):
        c = index_to_coord(v)
        hit = next((cl for cl in clauses if cl.applies(c.row, c.column, n)), None)
        if hit is None:
            raise AssertionError(f"no clause labels vertex {c} for n={n}")
        labels.append(hit.label)
    return Labeling(tuple(labels))


def audit_clauses(clauses, n: int) -> list[ClauseIssue]:
    """Vertices labelled by no clause, or by clauses that disagree."""
    issues = []
    for v in range(2 * n):
        c = index_to_coord(v)
        found = tuple(sorted({cl.label for cl in clauses if cl.applies(c.row, c.column, n)}))
        if len(found) != 1:
            issues.append(ClauseIssue(c, found))
    return issues


def construct_lg(n: int) -> Labeling:
    if n < 2:
        raise InvalidParameter(f"ladder construction requires n >= 2, got {n}")
    return apply_clauses(LG_CLAUSES, n)


def construct_lg_complement(n: int) -> Labeling:
    if n < 4:
        raise InvalidParameter(
            f"ladder-complement construction requires n >= 4, got {n} (see FIGURES)"
        )
    return apply_clauses(LG_COMPLEMENT_CLAUSES, n)


def construct_lc(n: int) -> Labeling:
    if n < 3:
        raise InvalidParameter(f"circular-ladder construction requires n >= 3, got {n}")
    if n == 5:
        raise ExcludedCase(
            "no general construction for the circular ladder with n = 5; "
            "use solve_circular_ladder_dp or the stored figure labeling"
        )
    return apply_clauses(LC_CLAUSES, n)


def construct_lc_complement(n: int) -> Labeling:
    if n < 5:
        raise InvalidParameter(
            f"circular-ladder-complement construction requires n >= 5, got {n} (see FIGURES)"
        )
    return apply_clauses(LC_COMPLEMENT_CLAUSES, n)


CONSTRUCTORS = {
    Family.LADDER: construct_lg,
    Family.LADDER_COMPLEMENT: construct_lg_complement,
    Family.CIRCULAR_LADDER: construct_lc,
    Family.CIRCULAR_LADDER_COMPLEMENT: construct_lc_complement,
}

CLAUSES = {
    Family.LADDER: LG_CLAUSES,
    Family.LADDER_COMPLEMENT: LG_COMPLEMENT_CLAUSES,
    Family.CIRCULAR_LADDER: LC_CLAUSES,
    Family.CIRCULAR_LADDER_COMPLEMENT: LC_COMPLEMENT_CLAUSES,
}


def labeling_for(spec: FamilySpec) -> tuple[Labeling, str] | None:
    """Best available explicit labeling and where it came from
    (``"construction"`` or ``"figure"``); None for other families."""
    if spec in FIGURES:
        return FIGURES[spec], "figure"
    build = CONSTRUCTORS.get(spec.family)
    if build is None:
        return None
    return build(spec.n), "construction"


def construction_certificate(spec: FamilySpec) -> Certificate:
    found = labeling_for(spec)
    if found is None:
        raise InvalidParameter(f"no explicit labeling is known for {spec}")
    labeling, origin = found
    # not validated here: an invalid construction is a finding to report
    return Certificate(
        graph=family(spec),
        labeling=labeling,
        weight=weight(labeling),
        claimed_optimal=False,
        method=Method.CONSTRUCTION,
        source=origin,
    )
