"""Command-line interface.

    linecross <subcommand> A B [--base N] [--method M] [--out PATH]
              [--format F] [--show-counts] [--show-bands]

Exit status: 0 on success, 1 on a domain error (bad digit, bad base, ...),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from itertools import zip_longest

from .diagram import DiagramConfig, layout_lines, render_ascii, render_schoolbook_ascii, render_svg
from .digits import format_digits, parse_digits, to_value
from .errors import LinecrossError
from .gridmult import build_grid, grid_multiply, schoolbook_multiply, schoolbook_rows
from .opcount import compare_ops
from .trace import build_trace, serialize_trace

FORMATS = {
    "multiply": ("plain",),
    "render": ("svg", "ascii"),
    "trace": ("json",),
    "compare": ("plain",),
    "opcount": ("plain", "json"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("a", metavar="A", help="first factor")
    common.add_argument("b", metavar="B", help="second factor")
    common.add_argument("--base", type=int, default=10, help="number base, 2-16 (default 10)")
    common.add_argument("--method", choices=("grid", "schoolbook", "count"), default="grid")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--format", dest="fmt", metavar="F",
                        choices=("svg", "ascii", "json", "plain"))
    common.add_argument("--show-counts", action="store_true", help="label readout bands (svg)")
    common.add_argument("--show-bands", action="store_true", help="shade readout bands (svg)")

    parser = argparse.ArgumentParser(prog="linecross",
                                     description="Line-crossing multiplication toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")
    sub.add_parser("multiply", parents=[common], help="print the product")
    sub.add_parser("render", parents=[common], help="draw the line diagram (svg or ascii)")
    sub.add_parser("trace", parents=[common], help="emit the JSON step trace")
    sub.add_parser("compare", parents=[common], help="grid vs schoolbook, side by side")
    sub.add_parser("opcount", parents=[common], help="operation counts for each method")
    return parser


def _side_by_side(left: str, right: str, gap: int = 6) -> str:
    ll, rl = left.splitlines(), right.splitlines()
    w = max(len(s) for s in ll)
    return "\n".join(f"{x.ljust(w)}{' ' * gap}{y}".rstrip()
                     for x, y in zip_longest(ll, rl, fillvalue="")) + "\n"


def _multiply(a, b, method):
    if method == "schoolbook":
        return schoolbook_multiply(a, b)
    return grid_multiply(a, b, unary=(method == "count"))


def _compare(a, b):
    grid = grid_multiply(a, b)
    school = schoolbook_multiply(a, b)
    expected = to_value(a) * to_value(b)
    ok = grid == school and to_value(grid) == expected
    text = _side_by_side("line crossings\n" + render_ascii(build_grid(a, b)),
                         "schoolbook, no carries\n" + render_schoolbook_ascii(schoolbook_rows(a, b)))
    text += (f"\ngrid:       {format_digits(grid)}\n"
             f"schoolbook: {format_digits(school)}\n"
             f"exact:      {format_digits(type(a).from_int(expected, a.base))}\n"
             f"{'VERIFIED' if ok else 'MISMATCH'}\n")
    return text, ok


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    fmt = args.fmt or FORMATS[args.command][0]
    if fmt not in FORMATS[args.command]:
        try:
            parser.error(f"--format {fmt} is not available for {args.command}")
        except SystemExit as exc:
            return int(exc.code)

    status = 0
    try:
        a = parse_digits(args.a, args.base)
        b = parse_digits(args.b, args.base)
        if args.command == "multiply":
            text = format_digits(_multiply(a, b, args.method)) + "\n"
        elif args.command == "render":
            if fmt == "svg":
                cfg = DiagramConfig(show_counts=args.show_counts, show_bands=args.show_bands)
                text = render_svg(layout_lines(a, b, cfg))
            else:
                text = render_ascii(build_grid(a, b))
        elif args.command == "trace":
            text = serialize_trace(build_trace(a, b, args.method)) + "\n"
        elif args.command == "compare":
            text, ok = _compare(a, b)
            status = 0 if ok else 1
        else:
            report = compare_ops(a, b)
            text = (report.to_json() if fmt == "json" else report.to_text()) + "\n"
    except LinecrossError as exc:
        print(f"linecross: error: {exc}", file=sys.stderr)
        return 1

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())
