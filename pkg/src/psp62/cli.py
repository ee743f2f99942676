"""Command line: ``psp62 verify`` and ``psp62 explain``.

Exit codes: 0 all requested stages verified, 1 a stage failed (the report
is still written), 2 usage or constants-file error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import claims as C
from .constants import ConstantsError
from .dedekind import DEFAULT_PER_PRIME, DEFAULT_TOL_FIX, DEFAULT_TOL_FIX2
from .pipeline import Config, dumps_report, run, summary_lines

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _prime_list(text: str) -> list[int]:
    try:
        out = [int(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty prime list")
    return out


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psp62", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification stages and write a report")
    v.add_argument("--stage", action="append", choices=list(C.STAGES) + ["all"],
                   help="stage to run (repeatable; prerequisites are added); default all")
    v.add_argument("--primes", type=_prime_list,
                   help="comma-separated primes for Frobenius sampling (default: 25 above 100)")
    v.add_argument("--samples-per-prime", type=int, default=DEFAULT_PER_PRIME)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--a0", type=_rational, action="append",
                   help="specialization of the parameter a (repeatable; default 1 2 3)")
    v.add_argument("--report", type=Path, help="write the JSON report here")
    v.add_argument("--tolerance-fix", type=float, default=DEFAULT_TOL_FIX)
    v.add_argument("--tolerance-fix2", type=float, default=DEFAULT_TOL_FIX2)
    v.add_argument("--constants", type=Path, help="alternative constants file")
    v.add_argument("--timings", action="store_true",
                   help="record wall times (the report is then not byte-reproducible)")
    v.add_argument("--quiet", action="store_true", help="no summary on stdout")

    e = sub.add_parser("explain", help="describe a claim")
    e.add_argument("claim_id", nargs="?", help="claim identifier; omit to list all")
    return ap


def _verify(args) -> int:
    if args.samples_per_prime < 1:
        print("error: --samples-per-prime must be positive", file=sys.stderr)
        return EXIT_USAGE
    config = Config(
        stages=args.stage or ["all"],
        primes=args.primes,
        samples_per_prime=args.samples_per_prime,
        seed=args.seed,
        a0=args.a0 or [Fraction(1), Fraction(2), Fraction(3)],
        tolerance_fix=args.tolerance_fix,
        tolerance_fix2=args.tolerance_fix2,
        constants=str(args.constants) if args.constants else None,
        timings=args.timings,
    )
    try:
        report = run(config)
    except ConstantsError as exc:
        print(f"error: constants file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.report:
        args.report.write_text(dumps_report(report), encoding="utf-8")
    if not args.quiet:
        print("\n".join(summary_lines(report)))
    return EXIT_FAILED if report["overall"] == C.FAILED else EXIT_OK


def _explain(args) -> int:
    if args.claim_id is None:
        for cid, cl in C.CLAIMS.items():
            print(f"{cid:<40} {cl.kind}")
        return EXIT_OK
    try:
        print(C.explain(args.claim_id), end="")
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return _verify(args) if args.command == "verify" else _explain(args)


if __name__ == "__main__":
    sys.exit(main())
