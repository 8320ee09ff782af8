"""Command line for rendering figures from pipeline CSVs.

Either point at a JSON request file or give the flags directly:

    plotkit render --request figure.json
    plotkit render --kind zeros-circle --input zeros.csv --out fig.png --arc default
"""
from __future__ import annotations

import argparse
import json
import sys

from .render import (DEFAULT_ARC_HALF_ANGLE, FIGURE_KINDS, FigureRequest,
                     PlotkitError, render)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plotkit",
                                     description="figure rendering for zeros-pipeline CSVs")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure")
    p.add_argument("--request", help="JSON FigureRequest file")
    p.add_argument("--kind", choices=FIGURE_KINDS)
    p.add_argument("--input", help="input CSV path")
    p.add_argument("--out", help="output image path")
    p.add_argument("--arc", help="inner-bound arc half-angle in radians, or 'default'")
    p.add_argument("--zoom", nargs=2, type=float, metavar=("LO", "HI"),
                   help="inset window for the staircase figure")
    p.add_argument("--title")
    return parser


def request_from_args(args: argparse.Namespace) -> FigureRequest:
    if args.request:
        return FigureRequest.from_json_file(args.request)
    if not (args.kind and args.input and args.out):
        raise PlotkitError("provide --request, or all of --kind/--input/--out")
    arc = None
    if args.arc is not None:
        arc = DEFAULT_ARC_HALF_ANGLE if args.arc == "default" else float(args.arc)
    return FigureRequest(kind=args.kind, input_path=args.input, output_path=args.out,
                         arc_half_angle=arc,
                         zoom=tuple(args.zoom) if args.zoom else None,
                         title=args.title)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        written = render(request_from_args(args))
        print(json.dumps({"written": [written]}))
        return 0
    except (PlotkitError, ValueError, OSError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
