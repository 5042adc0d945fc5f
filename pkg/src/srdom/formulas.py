"""Closed-form values and general lower bounds for the signed Roman domination number.

The per-family values are catalogued exactly as published. Some of them are
not correct for every ``n`` (the exact solvers show where); they are kept
verbatim so discrepancies can be reported rather than hidden.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter
from .graphs import Family, FamilySpec, Graph, degree_stats


class Source(str, enum.Enum):
    THEOREM = "theorem"
    FIGURE = "figure"
    KNOWN_PRIOR = "known-prior"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FormulaResult:
    """``value`` is None when no published result covers the case."""

    value: int | None
    source: Source | None

    def __post_init__(self):
        if (self.value is None) != (self.source is None):
            raise ValueError("value and source must be given together")

    @property
    def covered(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "not-covered" if self.value is None else f"{self.value} ({self.source})"


NOT_COVERED = FormulaResult(None, None)


def ladder_value(n: int) -> int:
    return (n + 2) // 2 + 1


def circular_ladder_value(n: int) -> int:
    return (n + 2) // 2 + (2 if n % 4 == 1 else 1)


def gamma_formula(spec: FamilySpec | Family | str, n: int | None = None) -> FormulaResult:
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(Family(spec), n)
    fam, n = spec.family, spec.n
    if fam is Family.PATH:
        return FormulaResult(2 * n // 3, Source.KNOWN_PRIOR)
    if fam is Family.CYCLE:
        return FormulaResult(-(-2 * n // 3), Source.KNOWN_PRIOR)
    if fam is Family.COMPLETE:
        return FormulaResult(2 if n == 3 else 1, Source.KNOWN_PRIOR)
    if fam is Family.LADDER:
        return FormulaResult(ladder_value(n), Source.THEOREM)
    if fam is Family.LADDER_COMPLEMENT:
        if n >= 4:
            return FormulaResult(2, Source.THEOREM)
        return FormulaResult({2: 2, 3: 3}[n], Source.FIGURE)
    if fam is Family.CIRCULAR_LADDER:
        if n == 5:
            return FormulaResult(4, Source.FIGURE)
        return FormulaResult(circular_ladder_value(n), Source.THEOREM)
    if fam is Family.CIRCULAR_LADDER_COMPLEMENT:
        if n >= 5:
            return FormulaResult(3, Source.THEOREM)
        return FormulaResult(4, Source.FIGURE)
    return NOT_COVERED


def degree_bound(n_vertices: int, min_deg: int, max_deg: int) -> Fraction:
    """Degree lower bound as an exact fraction of the vertex count."""
    D, d = max_deg, min_deg
    num = -2 * D * D + 2 * D * d + D + 2 * d + 3
    den = (D + 1) * (2 * D + d + 3)
    return Fraction(num, den) * n_vertices


def lower_bound_degree(g: Graph) -> Fraction:
    if g.vertex_count == 0:
        raise InvalidParameter("degree bound is undefined for the empty graph")
    d, D, _ = degree_stats(g)
    return degree_bound(g.vertex_count, d, D)


def lower_bound_size(g: Graph) -> Fraction | None:
    """``(3n - 4m) / 2``; None (inapplicable) when ``g`` has an isolated vertex."""
    if g.has_isolated_vertex():
        return None
    return Fraction(3 * g.vertex_count - 4 * g.edge_count, 2)
