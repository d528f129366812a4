"""Command line front end.

Exit codes: 0 success (feasible, no cycle, validation OK), 1 the negative
answer (infeasible, cycle found, validation FAIL), 2 any error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import docio
from .certificates import certify
from .errors import SquarabilityError, TooLarge
from .fm import fm_oracle
from .gallery import gallery, gallery_names
from .geometry import classify_pair
from .lp import build_lp, solve_feasibility, reconstruct_squares
from .svg import SvgOptions, render_svg
from .validators import VARIANTS

OK, NEGATIVE, ERROR = 0, 1, 2


def _decide(args) -> int:
    arr = docio.load(args.file)
    system = build_lp(arr)
    verdict = solve_feasibility(system)
    print(verdict)
    if args.oracle:
        try:
            check = fm_oracle(system)
        except TooLarge as exc:
            print(f"oracle: skipped ({exc})")
        else:
            if check.feasible != verdict.feasible:
                print(f"oracle disagrees: {check}", file=sys.stderr)
                return ERROR
            print("oracle: agrees")
    if not verdict.feasible:
        return NEGATIVE
    if args.witness:
        squares = reconstruct_squares(system, verdict.witness.assignment, arr)
        docio.dump(squares, args.witness)
    return OK


def _certify(args) -> int:
    arr = docio.load(args.file)
    cert = certify(arr)
    if cert is None:
        print("NONE")
        return OK
    print("CYCLE " + " -> ".join(arr.label(i) for i in cert.cycle))
    print(cert.describe(arr))
    return NEGATIVE


def _classify(args) -> int:
    arr = docio.load(args.file)
    print("first\tsecond\trelations\tkind")
    for i, j in arr.pairs():
        d = classify_pair(arr.box(i), arr.box(j))
        rel = ",".join(r.value for r in d.relations)
        print(f"{arr.label(i)}\t{arr.label(j)}\t{rel}\t{d.kind.value}")
    return OK


def _validate(args) -> int:
    inp, cand = docio.load(args.input), docio.load(args.candidate)
    good = VARIANTS[args.variant](inp, cand)
    print("OK" if good else "FAIL")
    return OK if good else NEGATIVE


def _gallery(args) -> int:
    if args.name is None:
        print("\n".join(gallery_names()))
        return OK
    text = docio.serialize(gallery(args.name))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def _render(args) -> int:
    arr = docio.load(args.file)
    highlight = ()
    if args.highlight_cycle:
        cert = certify(arr)
        highlight = tuple(cert.cycle) if cert else ()
    svg = render_svg(arr, SvgOptions(width=args.width, labels=not args.no_labels, highlight=highlight))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squarability", description="Squaring axis-aligned rectangle arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide order-preserving squarability")
    p.add_argument("file")
    p.add_argument("--witness", metavar="OUT", help="write the square arrangement here when feasible")
    p.add_argument("--oracle", action="store_true", help="cross-check with Fourier-Motzkin elimination")
    p.set_defaults(run=_decide)

    p = sub.add_parser("certify", help="look for a size-order cycle")
    p.add_argument("file")
    p.set_defaults(run=_certify)

    p = sub.add_parser("classify", help="print pairwise relations and intersection kinds")
    p.add_argument("file")
    p.set_defaults(run=_classify)

    p = sub.add_parser("validate", help="check a candidate against an input")
    p.add_argument("input")
    p.add_argument("candidate")
    p.add_argument("--variant", choices=sorted(VARIANTS), default="order")
    p.set_defaults(run=_validate)

    p = sub.add_parser("gallery", help="write a built-in arrangement (no name lists them)")
    p.add_argument("name", nargs="?", help=f"one of {', '.join(gallery_names())}")
    p.add_argument("-o", "--output")
    p.set_defaults(run=_gallery)

    p = sub.add_parser("render", help="draw a planar arrangement as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--highlight-cycle", action="store_true", help="emphasise the members of a size-order cycle")
    p.set_defaults(run=_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (OSError, SquarabilityError, KeyError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
