"""Command line interface.

Subcommands: classify, surfaces, lemma, trace, parse.  Output is plain
text by default; --json (and --csv for surfaces) switch formats.  Exit
codes: 0 success, 1 unusable input (bad syntax or bad arguments), 2 a
domain error (input parsed but cannot be classified), 3 an internal
invariant violation.  All output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from csv import writer as csv_writer
from itertools import combinations_with_replacement
from typing import IO

from .errors import (
    DegenerateTangleError,
    DomainError,
    InvariantError,
    ParseError,
    PretzelRepError,
    UnsupportedInputError,
)
from .linktrace import _is_knot_fast, component_count, pretzel_diagram
from .repclassify import (
    RepReport,
    _montesinos_triple,
    representativity_bounds,
)
from .surfacescan import AssignmentScan, scan_assignments
from .slopelemma import enumerate_solutions
from .tanglecalc import (
    Closure,
    Montesinos,
    Pretzel,
    PretzelTriple,
    RationalTangle,
    Sum,
    TangleExpr,
    is_large_algebraic,
    normalize_pretzel,
    parse_expr,
    print_expr,
)

__all__ = ["run", "main", "build_parser"]

_RANGE = re.compile(r"^(-?\d+):(-?\d+)$")


class _UsageError(PretzelRepError):
    """Bad command line arguments; exits 1 like a syntax error."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # values like -3:3 or -1/2 are arguments, not option strings
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):  # argparse would sys.exit(2); we map to 1
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pretzelrep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="representativity bounds report")
    p_classify.add_argument("expr", nargs="?", help="expression, e.g. P(-2,3,5)")
    p_classify.add_argument("--range", dest="range_spec", metavar="A:B",
                            help="classify all pretzel knots with entries in A..B")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(handler=_cmd_classify)

    p_surfaces = sub.add_parser("surfaces", help="candidate surface scan")
    p_surfaces.add_argument("expr", help="pretzel expression P(p,q,r)")
    fmt = p_surfaces.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p_surfaces.set_defaults(handler=_cmd_surfaces)

    p_lemma = sub.add_parser("lemma", help="reciprocal-sum solutions with parameters")
    p_lemma.add_argument("--max", dest="max_c", type=int, required=True,
                         metavar="N", help="largest allowed c, at least 2")
    p_lemma.add_argument("--json", action="store_true")
    p_lemma.set_defaults(handler=_cmd_lemma)

    p_trace = sub.add_parser("trace", help="planar diagram code and components")
    p_trace.add_argument("expr", help="pretzel expression P(p,q,r)")
    p_trace.add_argument("--json", action="store_true")
    p_trace.set_defaults(handler=_cmd_trace)

    p_parse = sub.add_parser("parse", help="parse and reprint an expression")
    p_parse.add_argument("expr", help="tangle expression")
    p_parse.add_argument("--json", action="store_true")
    p_parse.set_defaults(handler=_cmd_parse)
    return parser


def run(argv: list[str] | None = None,
        out: IO[str] | None = None,
        err: IO[str] | None = None) -> int:
    """Execute one command line; returns the exit code without exiting."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help prints and exits 0
            return int(exc.code or 0)
        args.handler(args, out)
        return 0
    except (_UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except InvariantError as exc:
        print(f"internal error: {exc}", file=err)
        return 3


def main() -> None:
    sys.exit(run())


# --- classify ---


def _cmd_classify(args, out) -> None:
    if (args.expr is None) == (args.range_spec is None):
        raise _UsageError("classify needs exactly one of an expression or --range A:B")
    if args.range_spec is not None:
        _classify_range(args.range_spec, args.json, out)
        return
    expression = parse_expr(args.expr)
    report = representativity_bounds(expression)
    if args.json:
        _emit_json(_report_json(args.expr, expression, report), out)
    else:
        for line in _report_text(expression, report):
            print(line, file=out)


def _classify_range(spec: str, as_json: bool, out) -> None:
    m = _RANGE.match(spec)
    if m is None:
        raise _UsageError(f"--range expects A:B with integers, got {spec!r}")
    low, high = int(m.group(1)), int(m.group(2))
    if low > high:
        raise _UsageError(f"--range bounds are out of order: {spec}")
    values = [v for v in range(low, high + 1) if v != 0]
    reports = []
    for entries in combinations_with_replacement(values, 3):
        if not _is_knot_fast(entries):
            continue
        triple = PretzelTriple(*entries)
        expression = Pretzel(triple)
        report = representativity_bounds(expression)
        reports.append((expression, report))
    if as_json:
        _emit_json([_report_json(print_expr(e), e, r) for e, r in reports], out)
    else:
        for expression, report in reports:
            print(_range_line(expression, report), file=out)


def _range_line(expression: Pretzel, report: RepReport) -> str:
    if report.exact is not None:
        bounds = f"r={report.exact} exact"
    else:
        bounds = f"r in [{report.lower},{report.upper}]"
    line = f"{print_expr(expression)}  {bounds}"
    if report.torus is not None:
        if report.torus.params is not None:
            p, q = report.torus.params
            line += f"  torus=({p},{q})"
        else:
            line += "  torus=yes"
    return line


def _classified_triple(expression: TangleExpr) -> PretzelTriple | None:
    if isinstance(expression, Pretzel):
        return expression.triple
    if isinstance(expression, Montesinos):
        return _montesinos_triple(expression)
    return None


def _report_text(expression: TangleExpr, report: RepReport) -> list[str]:
    triple = _classified_triple(expression)
    lines = [f"input: {print_expr(expression)}"]
    if triple is not None:
        canonical, mirror = normalize_pretzel(triple)
        kind = "pretzel" if isinstance(expression, Pretzel) else "montesinos"
        lines.append(f"kind: {kind}")
        lines.append(f"normalized: P({canonical.p},{canonical.q},{canonical.r})")
        lines.append(f"mirror: {'yes' if mirror else 'no'}")
        lines.append("knot: yes")
        lines.append(f"bridge bound: {report.bridge_upper}")
        if report.torus is not None:
            if report.torus.params is not None:
                p, q = report.torus.params
                lines.append(f"torus: ({p},{q})")
            else:
                lines.append("torus: yes (parameters not tracked)")
    else:
        lines.append("kind: closure")
        lines.append(f"large algebraic: {'yes' if is_large_algebraic(expression) else 'no'}")
    if report.exact is not None:
        lines.append(f"bounds: lower={report.lower} upper={report.upper} exact={report.exact}")
    else:
        lines.append(f"bounds: lower={report.lower} upper={report.upper}")
    lines.append("rules:")
    for rule in report.rules:
        lines.append(f"  - {rule.name} [{_effect_text(rule)}]: {rule.citation}")
    if triple is not None:
        rows = _surface_rows(triple)
        if rows is None:
            lines.append("surfaces: not computed (degenerate twist parameters)")
        else:
            structural = [row for row in rows if row.structural]
            if structural:
                lines.append("surfaces:")
                lines.extend(f"  {_row_text(row)}" for row in structural)
            else:
                lines.append("surfaces: none")
    return lines


def _effect_text(rule) -> str:
    if rule.sets == "upper":
        effect = f"upper <= {rule.value}"
    elif rule.sets == "exact":
        effect = f"exact = {rule.value}"
    else:
        effect = "info"
    if rule.conditional:
        effect += ", conditional"
    return effect


def _surface_rows(triple: PretzelTriple) -> list[AssignmentScan] | None:
    try:
        return scan_assignments(triple)
    except DegenerateTangleError:
        return None


def _report_json(input_text: str, expression: TangleExpr, report: RepReport) -> dict:
    triple = _classified_triple(expression)
    obj: dict = {"input": input_text}
    if triple is not None:
        canonical, mirror = normalize_pretzel(triple)
        obj["kind"] = "pretzel" if isinstance(expression, Pretzel) else "montesinos"
        obj["normalized"] = list(canonical.entries())
        obj["mirror"] = mirror
        obj["is_knot"] = True
        obj["large_algebraic"] = None
    else:
        obj["kind"] = "closure"
        obj["normalized"] = None
        obj["mirror"] = None
        obj["is_knot"] = None
        obj["large_algebraic"] = is_large_algebraic(expression)
    obj["bridge_upper"] = report.bridge_upper
    if report.torus is None:
        obj["torus"] = None
    else:
        params = report.torus.params
        obj["torus"] = {"params": list(params) if params is not None else None}
    obj["lower"] = report.lower
    obj["upper"] = report.upper
    obj["exact"] = report.exact
    obj["rules"] = [
        {"name": r.name, "citation": r.citation, "sets": r.sets,
         "value": r.value, "conditional": r.conditional}
        for r in report.rules
    ]
    if triple is not None:
        rows = _surface_rows(triple)
        obj["surfaces"] = None if rows is None else [_row_json(row) for row in rows]
    else:
        obj["surfaces"] = None
    return obj


# --- surfaces ---


def _cmd_surfaces(args, out) -> None:
    triple = _parse_pretzel_argument(args.expr, "surfaces")
    canonical, mirror = normalize_pretzel(triple)
    rows = scan_assignments(triple)
    if args.json:
        obj = {
            "input": args.expr,
            "normalized": list(canonical.entries()),
            "mirror": mirror,
            "rows": [_row_json(row) for row in rows],
        }
        _emit_json(obj, out)
    elif args.csv:
        table = csv_writer(out, lineterminator="\n")
        table.writerow(["types", "slope_1", "slope_2", "slope_3", "arcs",
                        "sheet_1", "sheet_2", "sheet_3", "chi", "genus",
                        "structural", "verdict", "family", "reason"])
        for row in rows:
            table.writerow(_row_csv(row))
    else:
        print(f"input: {args.expr}", file=out)
        print(f"normalized: P({canonical.p},{canonical.q},{canonical.r})", file=out)
        for row in rows:
            print(_row_text(row), file=out)


def _parse_pretzel_argument(text: str, command: str) -> PretzelTriple:
    expression = parse_expr(text)
    if not isinstance(expression, Pretzel):
        raise UnsupportedInputError(f"{command} expects a pretzel form P(p,q,r)")
    return expression.triple


def _row_text(row: AssignmentScan) -> str:
    types = "".join(row.tangle_types)
    s1, s2, s3 = row.boundary_slopes
    text = f"types={types} slopes=({s1},{s2},{s3})"
    if row.structural:
        h1, h2, h3 = row.sheets
        text += (f" arcs={row.arcs} sheets=({h1},{h2},{h3})"
                 f" chi={row.chi} genus={row.genus_val}")
    text += f" verdict={'accepted' if row.accepted else 'rejected'}"
    if row.family is not None:
        text += f" family={row.family}"
    if row.reason is not None:
        text += f" reason={row.reason}"
    return text


def _row_csv(row: AssignmentScan) -> list:
    def opt(value):
        return "" if value is None else value

    sheets = row.sheets if row.sheets is not None else (None, None, None)
    return ["".join(row.tangle_types), *row.boundary_slopes, opt(row.arcs),
            *(opt(h) for h in sheets), opt(row.chi), opt(row.genus_val),
            "true" if row.structural else "false",
            "accepted" if row.accepted else "rejected",
            opt(row.family), opt(row.reason)]


def _row_json(row: AssignmentScan) -> dict:
    return {
        "types": "".join(row.tangle_types),
        "slopes": list(row.boundary_slopes),
        "arcs": row.arcs,
        "sheets": list(row.sheets) if row.sheets is not None else None,
        "chi": row.chi,
        "genus": row.genus_val,
        "structural": row.structural,
        "verdict": "accepted" if row.accepted else "rejected",
        "family": row.family,
        "reason": row.reason,
    }


# --- lemma ---


def _cmd_lemma(args, out) -> None:
    if args.max_c < 2:
        raise _UsageError(f"--max must be at least 2, got {args.max_c}")
    solutions = enumerate_solutions(args.max_c)
    if args.json:
        _emit_json([{"a": s.a, "b": s.b, "c": s.c,
                     "k": s.k, "l": s.l, "d": s.d} for s in solutions], out)
    else:
        for s in solutions:
            print(f"{s.a} {s.b} {s.c} | k={s.k} l={s.l} d={s.d}", file=out)


# --- trace ---


def _cmd_trace(args, out) -> None:
    triple = _parse_pretzel_argument(args.expr, "trace")
    code = pretzel_diagram(triple.entries())
    components = component_count(code)
    pd = [list(crossing) for crossing in code.crossings]
    if args.json:
        _emit_json({"twists": list(triple.entries()),
                    "crossings": len(pd),
                    "components": components,
                    "pd": pd}, out)
    else:
        print(f"crossings: {len(pd)}", file=out)
        print(f"components: {components}", file=out)
        print(f"pd: {json.dumps(pd, separators=(',', ':'))}", file=out)


# --- parse ---


def _cmd_parse(args, out) -> None:
    expression = parse_expr(args.expr)
    if args.json:
        _emit_json({"input": args.expr,
                    "printed": print_expr(expression),
                    "tree": _tree_json(expression)}, out)
    else:
        print(print_expr(expression), file=out)


def _tree_json(expression: TangleExpr) -> dict:
    if isinstance(expression, RationalTangle):
        return {"kind": "rational", "slope": str(expression.slope)}
    if isinstance(expression, Sum):
        return {"kind": "sum",
                "left": _tree_json(expression.left),
                "right": _tree_json(expression.right)}
    if isinstance(expression, Pretzel):
        return {"kind": "pretzel", "entries": list(expression.triple.entries())}
    if isinstance(expression, Montesinos):
        return {"kind": "montesinos", "slopes": [str(f) for f in expression.slopes]}
    return {"kind": "closure", "inner": _tree_json(expression.inner)}


def _emit_json(obj, out) -> None:
    print(json.dumps(obj, indent=2), file=out)


if __name__ == "__main__":
    main()
