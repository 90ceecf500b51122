"""Command-line surface.

Every subcommand is a thin adapter over the library; no arithmetic
lives here.  Exit statuses: 0 success, 2 input error, 3 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import sys

from .cf import (
    ancestors_of_rational,
    cf_of_rational,
    decompose_special,
    format_rational_cf,
    is_descendant_rational,
    orphan_root_cf,
    parse_rational,
    plft_cf_expand,
)
from .census import harmonic_double_sum_reference, harmonic_double_sum, census_rows, ratio_series
from .complex_forest import GaussianRational, OrphanParams, ancestor_chain, is_complex_orphan
from .errors import InternalInvariantError
from .plft import Plft, format_word, root_by_iteration


def _parse_points(text: str) -> list[int]:
    try:
        points = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"--points wants comma-separated integers, got {text!r}") from None
    if not points:
        raise ValueError("--points is empty")
    return points


def _cmd_root(args) -> str:
    w = Plft.parse(args.plft)
    root, word = root_by_iteration(w)
    report = orphan_root_cf(w)
    if report.root != root:
        raise InternalInvariantError(
            f"continued-fraction route found {report.root.coeffs()}, iteration found {root.coeffs()}"
        )
    return f"root={root} word={format_word(word)}"


def _cmd_cf(args) -> str:
    if "," in args.value:
        return str(plft_cf_expand(Plft.parse(args.value)))
    r = parse_rational(args.value)
    if r <= 0:
        raise ValueError(f"expected a positive rational, got {r}")
    return format_rational_cf(cf_of_rational(r))


def _cmd_decompose(args) -> str:
    word = decompose_special(Plft.parse(args.plft))
    return "none" if word is None else f"word={format_word(word)}"


def _cmd_descend(args) -> str:
    first = parse_rational(args.ancestor)
    if args.target is None:
        return "\n".join(str(a) for a in ancestors_of_rational(first))
    return "true" if is_descendant_rational(first, parse_rational(args.target)) else "false"


def _cmd_census(args) -> str:
    lines = ["D,nu2,sigma,tau,h"]
    for row in census_rows(args.max):
        lines.append(f"{row.D},{row.nu2},{row.sigma},{row.tau},{row.h_closed}")
    return "\n".join(lines)


def _cmd_series(args) -> str:
    lines = ["x,summatory,reference,ratio"]
    for point in ratio_series(_parse_points(args.points)):
        lines.append(f"{point.x},{point.summatory},{point.reference!r},{point.ratio!r}")
    return "\n".join(lines)


def _cmd_aux(args) -> str:
    lines = ["x,sum,reference,ratio"]
    for x in _parse_points(args.points):
        total = harmonic_double_sum(x)
        ref = harmonic_double_sum_reference(x)
        lines.append(f"{x},{total!r},{ref!r},{total / ref!r}")
    return "\n".join(lines)


def _params(args) -> OrphanParams:
    return OrphanParams(u=args.u, v=args.v)


def _cmd_corphan(args) -> str:
    return "true" if is_complex_orphan(GaussianRational.parse(args.z), _params(args)) else "false"


def _cmd_cchain(args) -> str:
    root, steps = ancestor_chain(GaussianRational.parse(args.z), _params(args))
    if args.format == "csv":
        lines = ["step,move,re,im"]
        for i, step in enumerate(steps, start=1):
            lines.append(f"{i},{step.move},{step.value.re},{step.value.im}")
        return "\n".join(lines)
    moves = "".join(step.move for step in steps)
    return f"root={root} steps={len(steps)} moves={moves}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plft-forest",
        description="Exact computations in the forest of positive linear fractional transformations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root", parents=[common], help="orphan root and word of a PLFT a,b,c,d")
    p.add_argument("plft")
    p.set_defaults(handler=_cmd_root)

    p = sub.add_parser("cf", parents=[common], help="continued fraction of a PLFT a,b,c,d or rational p/q")
    p.add_argument("value")
    p.set_defaults(handler=_cmd_cf)

    p = sub.add_parser("decompose", parents=[common], help="word over L1,R1 multiplying out to the matrix")
    p.add_argument("plft")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "descend",
        parents=[common],
        help="with two rationals: is the second a descendant of the first; with one: its ancestors",
    )
    p.add_argument("ancestor")
    p.add_argument("target", nargs="?")
    p.set_defaults(handler=_cmd_descend)

    p = sub.add_parser("census", parents=[common], help="CSV census table D,nu2,sigma,tau,h")
    p.add_argument("--max", type=int, required=True, help="largest determinant")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("series", parents=[common], help="CSV summatory series x,summatory,reference,ratio")
    p.add_argument("--points", required=True, help="comma-separated x values")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("aux", parents=[common], help="CSV of the harmonic double sum against log^2(x)/2")
    p.add_argument("--points", required=True, help="comma-separated x values")
    p.set_defaults(handler=_cmd_aux)

    p = sub.add_parser("corphan", parents=[common], help="is p/q+r/s*i a complex (u,v)-orphan")
    p.add_argument("z")
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--v", type=int, default=1)
    p.set_defaults(handler=_cmd_corphan)

    p = sub.add_parser("cchain", parents=[common], help="ancestor chain of p/q+r/s*i up to its orphan root")
    p.add_argument("z")
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--v", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(handler=_cmd_cchain)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
