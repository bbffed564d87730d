"""Command-line front end.

Subcommands expose each part of the library with machine-readable output:

* ``sperner`` - transition-edge search on a label vector
* ``solve`` - certified fixed-point search for an expression
* ``plmap`` - piecewise-linear extension of a labeled grid
* ``counterexample`` - the rational inequivalence demonstration

Output formats are ``human``, ``json``, and ``csv`` (``--format``, or the
SPERNERFIX_FORMAT environment variable as the default). Rationals cross the
boundary as literal strings, never as native floats, including inside JSON;
decimal renderings are exact truncations. Each invocation emits one
well-formed JSON document in json mode and a header row in csv mode.

Exit codes: 0 success; 1 malformed input; 2 boundary-condition or self-map
violation; 3 bracket returned but unconverged (report still emitted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .counterexample import CounterexampleReport, run_demo
from .expr import parse
from .plmap import pl_evaluate, pl_fixed_points, pl_from_labeling, pl_trace
from .rationals import ParseError, decimal_string, parse_rational
from .solver import SolverConfig, solve
from .sperner import (
    BoundaryConditionError,
    ExactVertex,
    Grid,
    Labeling,
    NonSelfMapError,
    find_transition_bisect,
    find_transition_scan,
    parse_labels,
    parse_vertices,
)

FORMATS = ("human", "json", "csv")
FORMAT_ENV_VAR = "SPERNERFIX_FORMAT"


class _ArgumentParser(argparse.ArgumentParser):
    # Malformed invocations exit 1; argparse's default of 2 is reserved for
    # boundary/self-map violations.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_format() -> str:
    value = os.environ.get(FORMAT_ENV_VAR, "")
    return value if value in FORMATS else "human"


def _human(q: Fraction) -> str:
    return f"{q} ({decimal_string(q)})"


def _print_json(doc) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _print_csv(header: list[str], rows: list[list[str]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(row))


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default=_default_format(),
        help="output format (default from SPERNERFIX_FORMAT, else human)",
    )

    parser = _ArgumentParser(
        prog="spernerfix",
        description="Certified one-dimensional fixed-point search over exact rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "sperner",
        parents=[common],
        help="find a transition edge of a 0/1 labeling",
    )
    p.add_argument("labels", help="comma-separated labels, e.g. 0,0,1,1")
    p.add_argument("--vertices", help="comma-separated rational vertices aligned with the labels")
    p.set_defaults(func=cmd_sperner)

    p = sub.add_parser(
        "solve",
        parents=[common],
        help="locate a fixed point of an expression on [a, b]",
    )
    p.add_argument("expr", help="expression text, or - to read it from stdin")
    p.add_argument("a", help="left endpoint (rational literal)")
    p.add_argument("b", help="right endpoint (rational literal)")
    p.add_argument("--epsilon", default="1/1000000", help="target residual bound")
    p.add_argument("--lipschitz", default=None, help="declared Lipschitz bound for f")
    p.add_argument("--branching", type=int, default=2, help="subintervals per round")
    p.add_argument("--max-rounds", type=int, default=64, dest="max_rounds")
    p.add_argument("--mode", choices=["refine", "single_grid"], default="refine")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser(
        "plmap",
        parents=[common],
        help="piecewise-linear extension of a labeled grid",
    )
    p.add_argument("labels", help="comma-separated labels, e.g. 0,0,1")
    p.add_argument("--vertices", required=True, help="comma-separated rational vertices")
    p.add_argument("action", choices=["eval", "fixed-points", "trace"])
    p.add_argument("x", nargs="?", help="evaluation point (eval action only)")
    p.add_argument("--resolution", type=int, default=8, help="samples per edge (trace action)")
    p.set_defaults(func=cmd_plmap)

    p = sub.add_parser(
        "counterexample",
        parents=[common],
        help="run the rational counterexample demonstration",
    )
    p.add_argument("--depth", type=int, required=True, help="number of bisection rounds")
    p.set_defaults(func=cmd_counterexample)

    return parser


def cmd_sperner(args) -> int:
    labels = parse_labels(args.labels)
    labeling = Labeling(labels)
    scan = find_transition_scan(labeling)
    bis = find_transition_bisect(labeling)

    grid = None
    if args.vertices is not None:
        grid = Grid(parse_vertices(args.vertices))
        if len(grid.vertices) != len(labels):
            raise ValueError("vertex count must match label count")

    if args.format == "json":
        doc = {"scan": scan, "bisect": bis}
        if grid is not None:
            doc["scan_edge"] = [str(grid.vertices[scan - 1]), str(grid.vertices[scan])]
            doc["bisect_edge"] = [str(grid.vertices[bis - 1]), str(grid.vertices[bis])]
        _print_json(doc)
    elif args.format == "csv":
        header = ["scan", "bisect"]
        row = [str(scan), str(bis)]
        if grid is not None:
            header += ["scan_lo", "scan_hi", "bisect_lo", "bisect_hi"]
            row += [
                str(grid.vertices[scan - 1]),
                str(grid.vertices[scan]),
                str(grid.vertices[bis - 1]),
                str(grid.vertices[bis]),
            ]
        _print_csv(header, [row])
    else:
        for name, edge in (("scan", scan), ("bisect", bis)):
            line = f"{name} edge: {edge}"
            if grid is not None:
                lo, hi = grid.vertices[edge - 1], grid.vertices[edge]
                line += f" [{_human(lo)}, {_human(hi)}]"
            print(line)
    return 0


def cmd_solve(args) -> int:
    text = sys.stdin.read() if args.expr == "-" else args.expr
    f = parse(text)
    a = parse_rational(args.a)
    b = parse_rational(args.b)
    config = SolverConfig(
        epsilon=parse_rational(args.epsilon),
        lipschitz=None if args.lipschitz is None else parse_rational(args.lipschitz),
        branching=args.branching,
        max_rounds=args.max_rounds,
        mode=args.mode,
    )
    result = solve(f, a, b, config)

    if isinstance(result, ExactVertex):
        if args.format == "json":
            _print_json(
                {
                    "result": "exact",
                    "mode": config.mode,
                    "x": str(result.x),
                    "x_decimal": decimal_string(result.x),
                }
            )
        elif args.format == "csv":
            _print_csv(
                ["result", "mode", "rounds_used", "converged", "x", "lo", "hi", "g_lo", "g_hi", "width"],
                [["exact", config.mode, "", "", str(result.x), "", "", "", "", ""]],
            )
        else:
            print(f"exact fixed point: {_human(result.x)}")
        return 0

    bracket = result
    if args.format == "json":
        _print_json(
            {
                "result": "bracket",
                "mode": config.mode,
                "rounds_used": bracket.rounds_used,
                "converged": bracket.converged,
                "lo": str(bracket.lo),
                "hi": str(bracket.hi),
                "g_lo": str(bracket.g_lo),
                "g_hi": str(bracket.g_hi),
                "width": str(bracket.width),
                "lo_decimal": decimal_string(bracket.lo),
                "hi_decimal": decimal_string(bracket.hi),
                "width_decimal": decimal_string(bracket.width),
            }
        )
    elif args.format == "csv":
        _print_csv(
            ["result", "mode", "rounds_used", "converged", "x", "lo", "hi", "g_lo", "g_hi", "width"],
            [
                [
                    "bracket",
                    config.mode,
                    str(bracket.rounds_used),
                    _bool_text(bracket.converged),
                    "",
                    str(bracket.lo),
                    str(bracket.hi),
                    str(bracket.g_lo),
                    str(bracket.g_hi),
                    str(bracket.width),
                ]
            ],
        )
    else:
        print(f"mode: {config.mode}")
        print(f"converged: {'yes' if bracket.converged else 'no'}")
        print(f"rounds used: {bracket.rounds_used}")
        print(f"lo = {_human(bracket.lo)}")
        print(f"hi = {_human(bracket.hi)}")
        print(f"g(lo) = {_human(bracket.g_lo)}")
        print(f"g(hi) = {_human(bracket.g_hi)}")
        print(f"width = {_human(bracket.width)}")
    return 0 if bracket.converged else 3


def cmd_plmap(args) -> int:
    labels = parse_labels(args.labels)
    labeling = Labeling(labels)
    grid = Grid(parse_vertices(args.vertices))
    plmap = pl_from_labeling(grid, labeling)

    if args.action == "eval":
        if args.x is None:
            raise ValueError("the eval action requires an evaluation point")
        x = parse_rational(args.x)
        value = pl_evaluate(plmap, x)
        if args.format == "json":
            _print_json({"x": str(x), "value": str(value), "value_decimal": decimal_string(value)})
        elif args.format == "csv":
            _print_csv(["x", "value"], [[str(x), str(value)]])
        else:
            print(f"value at {x}: {_human(value)}")
    elif args.action == "fixed-points":
        points = pl_fixed_points(plmap)
        if args.format == "json":
            _print_json([str(p) for p in points])
        elif args.format == "csv":
            _print_csv(["fixed_point"], [[str(p)] for p in points])
        else:
            for p in points:
                print(_human(p))
    else:
        rows = pl_trace(plmap, args.resolution)
        if args.format == "json":
            _print_json([[str(x), str(y)] for x, y in rows])
        elif args.format == "csv":
            _print_csv(["x", "value"], [[str(x), str(y)] for x, y in rows])
        else:
            for x, y in rows:
                print(f"{x} -> {y}")
    return 0


def _report_record(report: CounterexampleReport) -> dict:
    bracket = report.bracket
    record: dict = {"depth": report.depth}
    for key, value in (
        ("lo", bracket.lo),
        ("hi", bracket.hi),
        ("g_lo", bracket.g_lo),
        ("g_hi", bracket.g_hi),
        ("width", bracket.width),
        ("midpoint", report.midpoint),
        ("midpoint_residual", report.midpoint_residual),
    ):
        record[key] = str(value)
        record[f"{key}_decimal"] = decimal_string(value)
    record["residual_floor_check"] = report.residual_floor_check
    record["contains_sqrt2"] = report.contains_sqrt2
    return record


def cmd_counterexample(args) -> int:
    if args.depth < 1:
        raise ValueError("depth must be at least 1")
    reports = run_demo(args.depth)
    if args.format == "json":
        _print_json([_report_record(r) for r in reports])
    elif args.format == "csv":
        _print_csv(
            ["depth", "width", "abs_residual"],
            [
                [str(r.depth), str(r.bracket.width), str(abs(r.midpoint_residual))]
                for r in reports
            ],
        )
    else:
        for r in reports:
            print(
                f"round {r.depth}: bracket [{r.bracket.lo}, {r.bracket.hi}], "
                f"width {_human(r.bracket.width)}, "
                f"|g(midpoint)| {_human(abs(r.midpoint_residual))}, "
                f"straddles sqrt2: {'yes' if r.contains_sqrt2 else 'no'}"
            )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BoundaryConditionError, NonSelfMapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: division by zero during evaluation: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
