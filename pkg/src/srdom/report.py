"""Text renderings: certificates, DOT drawings and the theorem-check table."""
from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import CLAUSES, audit_clauses, labeling_for
from .errors import SizeLimitError
from .formulas import FormulaResult, gamma_formula
from .graphs import Family, FamilySpec, Graph, family, index_to_coord
from .solver import Certificate, solve_branch_bound
from .srdf import Labeling, format_labeling, validate, weight

TABLE_BB_CAP = 14


def _coords(g: Graph) -> bool:
    return g.meta is not None and g.meta.family.has_coords


def format_certificate(cert: Certificate, porcelain: bool = False) -> str:
    report = cert.verify()
    fields = [
        ("graph", cert.descriptor),
        ("vertices", cert.graph.vertex_count),
        ("edges", cert.graph.edge_count),
        ("method", cert.method),
        ("weight", cert.weight),
        ("optimal", "yes" if cert.claimed_optimal else "no"),
        ("valid", "yes" if report.valid else "no"),
        ("nodes", cert.stats.nodes),
        ("elapsed", f"{cert.stats.elapsed:.4f}"),
    ]
    if cert.source:
        fields.append(("source", cert.source))
    if porcelain:
        lines = [f"{k}={v}" for k, v in fields]
        lines.append("labeling=" + ",".join(str(x) for x in cert.labeling))
        return "\n".join(lines) + "\n"
    lines = [f"{k}: {v}" for k, v in fields]
    if not report.valid:
        lines.append(f"sum-violations: {list(report.sum_violations)}")
        lines.append(f"two-violations: {list(report.two_violations)}")
    lines.append("labeling:")
    return "\n".join(lines) + "\n" + format_labeling(cert.labeling, coords=_coords(cert.graph))


_DOT_CLASS = {-1: ("label-minus", "#9ecae1"), 1: ("label-one", "#fdd0a2"), 2: ("label-two", "#e6550d")}


def render_dot(g: Graph, labeling: Labeling | None = None) -> str:
    if labeling is not None:
        validate(g, labeling)  # raises on length mismatch
    name = str(g.meta) if g.meta else "G"
    out = [f'graph "{name}" {{', "  node [shape=circle];"]
    for v in range(g.vertex_count):
        c = index_to_coord(v) if _coords(g) else None
        tag = f"{c.row}{c.column}" if c else str(v)
        if labeling is None:
            out.append(f'  {v} [label="{tag}"];')
        else:
            x = labeling[v]
            cls, color = _DOT_CLASS[x]
            out.append(
                f'  {v} [label="{x}", xlabel="{tag}", class="{cls}", '
                f'style=filled, fillcolor="{color}"];'
            )
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"


@dataclass
class TableRow:
    spec: FamilySpec
    formula: FormulaResult
    construction_weight: int | None = None
    construction_valid: bool | None = None
    construction_source: str = ""
    exact: int | None = None
    exact_method: str = ""
    issues: list[str] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.issues


def exact_value(spec: FamilySpec, bb_cap: int = TABLE_BB_CAP) -> Certificate | None:
    """Exact optimum when it is cheap enough for a table row, else None."""
    from .ladder_dp import solve_circular_ladder_dp, solve_ladder_dp

    if spec.family is Family.LADDER:
        return solve_ladder_dp(spec.n)
    if spec.family is Family.CIRCULAR_LADDER:
        return solve_circular_ladder_dp(spec.n)
    g = family(spec)
    try:
        return solve_branch_bound(g, cap=bb_cap)
    except SizeLimitError:
        return None


def table_row(spec: FamilySpec, bb_cap: int = TABLE_BB_CAP) -> TableRow:
    row = TableRow(spec=spec, formula=gamma_formula(spec))
    found = labeling_for(spec)
    if found is not None:
        labeling, origin = found
        report = validate(family(spec), labeling)
        row.construction_weight = weight(labeling)
        row.construction_valid = report.valid
        row.construction_source = origin
        if not report.valid:
            bad = sorted(set(report.sum_violations) | set(report.two_violations))
            row.issues.append(
                f"{origin} labeling invalid at " + ", ".join(str(index_to_coord(v)) for v in bad)
            )
        if row.formula.covered and row.construction_weight != row.formula.value:
            row.issues.append(
                f"{origin} weight {row.construction_weight} != formula {row.formula.value}"
            )
        if origin == "construction":
            row.issues.extend(f"clause {i}" for i in audit_clauses(CLAUSES[spec.family], spec.n))
    cert = exact_value(spec, bb_cap)
    if cert is not None:
        row.exact, row.exact_method = cert.weight, str(cert.method)
        if row.formula.covered and row.formula.value != cert.weight:
            row.issues.append(f"formula {row.formula.value} != exact {cert.weight}")
    return row


def format_table(rows: list[TableRow]) -> str:
    header = ("n", "formula", "construction", "exact", "status")
    body = []
    for r in rows:
        if r.construction_weight is None:
            cons = "-"
        else:
            cons = f"{r.construction_weight} {'valid' if r.construction_valid else 'INVALID'}"
            if r.construction_source == "figure":
                cons += " (figure)"
        formula = "-" if not r.formula.covered else (
            f"{r.formula.source}({r.formula.value})" if r.formula.source.value == "figure"
            else str(r.formula.value)
        )
        exact = "" if r.exact is None else f"{r.exact} ({r.exact_method})"
        status = "ok" if r.agrees else "MISMATCH: " + "; ".join(r.issues)
        body.append((str(r.spec.n), formula, cons, exact, status))
    widths = [max(len(x[i]) for x in [header, *body]) for i in range(len(header) - 1)]
    lines = []
    for cells in [header, *body]:
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)) + "  " + cells[-1])
    return "\n".join(lines) + "\n"
