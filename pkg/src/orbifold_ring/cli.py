"""Command-line front end.

    orbifold-ring info 1 2 3
    orbifold-ring table mult --ring model 1 2 3
    orbifold-ring --format json table pairing --ring chow 1 2 3
    orbifold-ring poincare 1 1 3
    orbifold-ring verify 1 2 2 3 3 3
    orbifold-ring verify sweep --max-n 3 --max-weight 6

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage or
invalid weights.
"""
from __future__ import annotations

import argparse
import sys

from . import output
from .combinatorics import make_weights
from .isomorphism import default_max_total, verify_sweep, verify_weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_weights(raw: list[str]):
    try:
        values = [int(x) for x in raw]
    except ValueError:
        raise UsageError(f"weights must be integers, got {' '.join(raw)}") from None
    try:
        return make_weights(values)
    except (ValueError, TypeError, OverflowError) as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    # shared options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS,
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="orbifold-ring", parents=[common],
        description="Orbifold Chow ring of P(w) and its graded group-algebra model.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="invariants and basis")
    p.add_argument("weights", nargs="+")

    p = sub.add_parser("table", parents=[common], help="degree/product/pairing/Xi tables")
    p.add_argument("which", choices=("deg", "mult", "pairing", "xi"))
    p.add_argument("--ring", choices=("chow", "model"), default="model",
                   help="ring to tabulate (default: model; ignored for xi)")
    p.add_argument("weights", nargs="+")

    p = sub.add_parser("poincare", parents=[common], help="graded dimensions")
    p.add_argument("weights", nargs="+")

    p = sub.add_parser("verify", parents=[common],
                       help="exhaustively verify one vector, or 'sweep' a range")
    p.add_argument("weights", nargs="+", help="weights, or the word 'sweep'")
    p.add_argument("--max-total", type=int, default=None,
                   help="refuse vectors with |w| above this "
                        "(default: $ORBIFOLD_RING_MAX_TOTAL or 200)")
    p.add_argument("--max-n", type=int, default=None,
                   help="sweep vectors of length 1..MAX_N+1")
    p.add_argument("--max-weight", type=int, default=None,
                   help="sweep entries 1..MAX_WEIGHT")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for a sweep (default: 1)")
    return parser


def _document(args):
    if args.command == "verify" and args.weights == ["sweep"]:
        if args.max_n is None or args.max_weight is None:
            raise UsageError("verify sweep needs --max-n and --max-weight")
        if args.max_n < 0 or args.max_weight < 1:
            raise UsageError("--max-n must be >= 0 and --max-weight >= 1")
        cap = args.max_total if args.max_total is not None else default_max_total()
        if (args.max_n + 1) * args.max_weight > cap:
            raise UsageError(f"sweep bounds allow |w| above the cap {cap}")
        report = verify_sweep(args.max_n, args.max_weight, cap, args.workers)
        return output.report_document(report, None, full=False), report.passed

    w = parse_weights(args.weights)
    if args.command == "info":
        return output.info_document(w), True
    if args.command == "poincare":
        return output.poincare_document(w), True
    if args.command == "table":
        if args.which == "deg":
            return output.degree_table(w, args.ring), True
        if args.which == "mult":
            return output.mult_table(w, args.ring), True
        if args.which == "pairing":
            return output.pairing_matrix(w, args.ring), True
        return output.xi_table(w), True
    try:
        report = verify_weights(w, args.max_total)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return output.report_document(report, w), report.passed


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    fmt = getattr(args, "format", "text")
    try:
        doc, passed = _document(args)
    except UsageError as exc:
        print(f"orbifold-ring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = doc.render(fmt)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
