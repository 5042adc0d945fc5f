"""Command-line interface.

Exit codes: 0 success, 1 input or parameter error, 2 verification failure,
3 theorem-check discrepancy.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
import math

from . import kernels
from .constructions import construction_certificate
from .errors import SizeLimitError, SRDomError
from .formulas import lower_bound_degree, lower_bound_size
from .graphs import Family, FamilySpec, format_edge_list, family, read_edge_list
from .ladder_dp import solve_circular_ladder_dp, solve_ladder_dp
from .report import format_certificate, format_table, render_dot, table_row
from .solver import solve_branch_bound, solve_exhaustive
from .srdf import format_labeling, read_labeling, validate, weight

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_DISCREPANCY = 0, 1, 2, 3

FAMILIES = [f.value for f in Family]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_graph_source(p, positional=True):
    if positional:
        p.add_argument("family_pos", nargs="?", metavar="FAMILY", choices=FAMILIES + [None])
        p.add_argument("n_pos", nargs="?", metavar="N", type=int)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="input", metavar="FILE", help="edge-list file")


def _graph(args):
    fam = getattr(args, "family", None) or getattr(args, "family_pos", None)
    n = args.n if getattr(args, "n", None) is not None else getattr(args, "n_pos", None)
    if args.input:
        if fam:
            raise UsageError("give either a family or --in, not both")
        return read_edge_list(args.input)
    if not fam or n is None:
        raise UsageError("need a family and n, or --in FILE")
    return family(FamilySpec(Family(fam), n))


def _emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    _emit(format_edge_list(_graph(args)), args.out)
    return EXIT_OK


def _solve(g, method, workers, deterministic):
    fam = g.meta.family if g.meta else None
    if method == "auto":
        method = "dp" if fam in (Family.LADDER, Family.CIRCULAR_LADDER) else "bb"
    if method == "dp":
        if fam is Family.LADDER:
            return solve_ladder_dp(g.meta.n)
        if fam is Family.CIRCULAR_LADDER:
            return solve_circular_ladder_dp(g.meta.n)
        raise UsageError("--method dp only applies to --family ladder or circular-ladder")
    if method == "exhaustive":
        return solve_exhaustive(g)
    return solve_branch_bound(g, workers=workers, deterministic=deterministic)


def cmd_solve(args):
    g = _graph(args)
    try:
        cert = _solve(g, args.method, args.workers, args.deterministic)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        hint = "use --method dp for ladder families" if g.meta and g.meta.family.has_coords else \
            "use --method bb, or a smaller graph"
        print(f"hint: {hint}", file=sys.stderr)
        return EXIT_INPUT
    _emit(format_certificate(cert, porcelain=args.porcelain), args.out)
    if args.labeling_out:
        _emit(format_labeling(cert.labeling), args.labeling_out)
    return EXIT_OK


def cmd_construct(args):
    g = _graph(args)
    if g.meta is None:
        raise UsageError("construct needs a family, not a file")
    cert = construction_certificate(g.meta)
    _emit(format_certificate(cert, porcelain=args.porcelain), args.out)
    return EXIT_OK if cert.verify().valid else EXIT_INVALID


def cmd_verify(args):
    graph_path = args.graph or args.input
    label_path = args.labeling_pos or args.labeling
    if not graph_path or not label_path:
        raise UsageError("verify needs a graph file and a labeling file")
    g = read_edge_list(graph_path)
    labeling = read_labeling(label_path)
    report = validate(g, labeling)
    if args.porcelain:
        print(f"valid={'yes' if report.valid else 'no'}")
        print(f"weight={weight(labeling)}")
        print("sum-violations=" + ",".join(map(str, report.sum_violations)))
        print("two-violations=" + ",".join(map(str, report.two_violations)))
    else:
        print(f"weight: {weight(labeling)}")
        print(f"valid: {'yes' if report.valid else 'no'}")
        for v in report.sum_violations:
            print(f"condition (i) violated at vertex {v}: closed-neighborhood sum "
                  f"{report.neighborhood_sums[v]}")
        for v in report.two_violations:
            print(f"condition (ii) violated at vertex {v}: label -1 without a neighbor labelled 2")
    return EXIT_OK if report.valid else EXIT_INVALID


def _fmt_bound(b: Fraction | None) -> str:
    if b is None:
        return "inapplicable"
    return f"{b} (ceil {math.ceil(b)})"


def cmd_bounds(args):
    g = _graph(args)
    deg = lower_bound_degree(g)
    size = lower_bound_size(g)
    if args.porcelain:
        print(f"degree-bound={deg}")
        print(f"degree-bound-ceil={math.ceil(deg)}")
        print(f"size-bound={'inapplicable' if size is None else size}")
        print(f"size-bound-ceil={'inapplicable' if size is None else math.ceil(size)}")
        print(f"upper-bound={g.vertex_count}")
    else:
        print(f"graph: {g.descriptor()}")
        print(f"degree bound: {_fmt_bound(deg)}")
        print(f"size bound: {_fmt_bound(size)}")
        print(f"upper bound: {g.vertex_count}")
    return EXIT_OK


def cmd_table(args):
    fam = Family(args.family_pos or args.family)
    lo, hi = args.start, args.stop
    if lo > hi:
        raise UsageError(f"empty range {lo}..{hi}")
    rows = [table_row(FamilySpec(fam, n), bb_cap=args.bb_cap) for n in range(lo, hi + 1)]
    print(f"# {fam}, n = {lo}..{hi}")
    sys.stdout.write(format_table(rows))
    if args.check and not all(r.agrees for r in rows):
        bad = [r.spec.n for r in rows if not r.agrees]
        print(f"# discrepancies at n = {bad}")
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_dot(args):
    if args.graph:
        g = read_edge_list(args.graph)
    else:
        g = _graph(args)
    labeling = read_labeling(args.labeling) if args.labeling else None
    _emit(render_dot(g, labeling), args.out)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="srdom", description="Signed Roman domination toolkit.")
    p.add_argument("--backend", choices=["compiled", "pure"], help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="write a family graph as an edge list")
    _add_graph_source(s)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="compute the exact optimum with a witness")
    _add_graph_source(s)
    s.add_argument("--method", choices=["auto", "exhaustive", "bb", "dp"], default="auto")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--deterministic", action="store_true")
    s.add_argument("--porcelain", action="store_true")
    s.add_argument("--out")
    s.add_argument("--labeling-out", metavar="FILE")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("construct", help="print the explicit labeling for a family")
    _add_graph_source(s)
    s.add_argument("--porcelain", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct, input=None)

    s = sub.add_parser("verify", help="check a labeling against a graph")
    s.add_argument("graph", nargs="?")
    s.add_argument("labeling_pos", nargs="?", metavar="LABELING")
    s.add_argument("--in", dest="input")
    s.add_argument("--labeling")
    s.add_argument("--porcelain", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="print the general lower bounds")
    _add_graph_source(s)
    s.add_argument("--porcelain", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("table", help="compare formulas, constructions and exact values")
    s.add_argument("family_pos", nargs="?", metavar="FAMILY", choices=FAMILIES + [None])
    s.add_argument("start", type=int)
    s.add_argument("stop", type=int)
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--check", action="store_true")
    s.add_argument("--bb-cap", type=int, default=14, help="largest complement graph to solve")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("dot", help="render a graph (and labeling) as DOT")
    s.add_argument("graph", nargs="?")
    s.add_argument("--labeling")
    _add_graph_source(s, positional=False)
    s.add_argument("--out")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "table" and not (args.family_pos or args.family):
            raise UsageError("table needs a family")
        if args.backend:
            kernels.use_backend(args.backend)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SRDomError, OSError, ValueError, ImportError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
