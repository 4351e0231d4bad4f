"""Command line: ``casedraw {validate,solve,oracle,render,gen}``.

Exit codes: 0 success, 1 usage error or open problem, 2 invalid input,
3 search budget or oracle cap exceeded.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .arrangement import build_arrangement
from .documents import casing_to_dict, dumps, parse_casing, parse_drawing, serialize_drawing
from .exceptions import BudgetExceeded, CapExceeded, CasingError, DocumentError, InvalidDrawingError, OpenProblemError
from .fixtures import generate_fixture
from .geometry import validate_drawing
from .oracle import enumerate_optimal_casing
from .render import SvgStyle, render_svg
from .solvers import solve, value_to_json
from .tunnels import DEFAULT_BUDGET
from .validation import MODELS, OBJECTIVES, check_model_objective

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _param(text: str):
    if "=" not in text:
        raise _UsageError(f"fixture parameter {text!r} is not key=value")
    key, raw = text.split("=", 1)
    try:
        value = int(raw)
    except ValueError:
        value = raw
    return key.replace("-", "_"), value


def cmd_validate(args):
    d = parse_drawing(args.input, validate=False)
    report = validate_drawing(d, near_tolerance=args.near_tolerance)
    doc = {
        "ok": report.ok,
        "n": d.n,
        "m": d.m,
        "errors": [{"kind": i.kind, "message": i.message} for i in report.errors],
        "warnings": [{"kind": i.kind, "message": i.message} for i in report.warnings],
    }
    _emit(dumps(doc), args.output)
    for issue in report.errors:
        print(f"error: {issue.kind}: {issue.message}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_solve(args):
    check_model_objective(args.model, args.objective)
    d = parse_drawing(args.input)
    sol = solve(d, args.model, args.objective, args.exact_budget, args.heuristic_fallback)
    doc = casing_to_dict(sol.casing, model=args.model, objective=args.objective, report=sol.report,
                         value=value_to_json(sol.value, args.objective))
    doc["solver"]["method"] = sol.method
    if sol.order is not None:
        doc["stacking_order"] = sol.order
    if sol.method == "heuristic":
        print("warning: exact search exceeded its budget; result is the optimal stacking (heuristic)", file=sys.stderr)
    _emit(dumps(doc), args.output)
    return EXIT_OK


def cmd_oracle(args):
    check_model_objective(args.model, args.objective, solvable=False)
    d = parse_drawing(args.input)
    res = enumerate_optimal_casing(d, args.model, args.objective, cap=args.cap)
    doc = casing_to_dict(res.witness, model=args.model, objective=args.objective,
                         value=value_to_json(res.value, args.objective))
    doc["solver"]["method"] = "oracle"
    doc["fingerprint"] = res.fingerprint
    if res.order is not None:
        doc["stacking_order"] = res.order
    _emit(dumps(doc), args.output)
    return EXIT_OK


def cmd_render(args):
    d = parse_drawing(args.input)
    arr = build_arrangement(d)
    casing = parse_casing(args.casing, arr)
    order = None
    if args.global_order:
        doc = json.loads(Path(args.casing).read_text(encoding="utf-8"))
        order = doc.get("stacking_order")
        if order is None:
            raise _UsageError("--global-order needs a casing document with a stacking_order")
    style = SvgStyle(margin=args.margin, scale=args.scale)
    _emit(render_svg(arr, casing, style, order=order), args.output)
    return EXIT_OK


def cmd_gen(args):
    params = dict(_param(p) for p in args.params)
    try:
        d = generate_fixture(args.fixture, params, seed=args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit(serialize_drawing(d), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="casedraw", description="Optimal casings of edge crossings in straight-line drawings.")
    p.add_argument("--version", action="version", version=f"casedraw {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("validate", help="check a drawing against the input restrictions")
    v.add_argument("input")
    v.add_argument("--near-tolerance", default=None, help="vertex clearance (default: half the casing width)")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("solve", help="compute an optimal casing")
    s.add_argument("input")
    s.add_argument("--model", choices=MODELS, required=True)
    s.add_argument("--objective", choices=OBJECTIVES, required=True)
    s.add_argument("--exact-budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--heuristic-fallback", action="store_true",
                   help="fall back to the optimal stacking when the exact tunnel-length search runs out of budget")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force optimum (small instances)")
    o.add_argument("input")
    o.add_argument("--model", choices=MODELS, required=True)
    o.add_argument("--objective", choices=OBJECTIVES, required=True)
    o.add_argument("--cap", type=int, default=None, help="largest k (weaving) or m (stacking) to enumerate")
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("render", help="write an SVG of a cased drawing")
    r.add_argument("input")
    r.add_argument("casing")
    r.add_argument("--margin", type=float, default=None, help="casing strip per side, drawing units")
    r.add_argument("--scale", type=float, default=50.0, help="pixels per drawing unit")
    r.add_argument("--global-order", action="store_true", help="paint edges in the document's stacking order")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)

    g = sub.add_parser("gen", help="write a fixture drawing")
    g.add_argument("fixture")
    g.add_argument("params", nargs="*", help="generator parameters as key=value")
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except OpenProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DocumentError, InvalidDrawingError, CasingError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


cli_main = main

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
