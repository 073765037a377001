"""Command-line front end for the verification suites.

Exit status: 0 when the suite passes, 1 when it runs but fails its
tolerance, 2 for configuration problems (unknown suite, bad group or
algebra, unwritable output, ...).  ``WEYLLAB_SEED`` and ``WEYLLAB_TOL``
override the built-in defaults when the corresponding flag is absent.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from .errors import WeyllabError
from .suites import SuiteConfig, registered_suites, run_suite


def _parse_group(text: str) -> tuple:
    parts = text.replace("x", ",").split(",")
    try:
        orders = tuple(int(p) for p in parts if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad group {text!r}; want e.g. 2,2 or 2x3")
    if not orders:
        raise argparse.ArgumentTypeError(f"bad group {text!r}; want e.g. 2,2 or 2x3")
    return orders


def _parse_one_p(text: str) -> float:
    text = text.strip()
    if text in ("inf", "Inf", "infinity"):
        return math.inf
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _parse_p(text: str) -> tuple:
    try:
        values = tuple(_parse_one_p(part) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}; want e.g. 2 or 4/3,3/2")
    if not values:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}; want e.g. 2 or 4/3,3/2")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weyllab",
        description="Randomized verification suites for twisted convolution "
        "and the Weyl transform on finite abelian phase spaces.",
        epilog="registered suites: " + ", ".join(registered_suites()),
    )
    parser.add_argument("--suite", required=True, help="suite name to run")
    parser.add_argument("--group", type=_parse_group, default=(2,),
                        help="cyclic orders, e.g. 2,2 or 6 (default: 2)")
    parser.add_argument("--algebra", default="c",
                        help="algebra label: c, cn:<n>, dual, file:<path> (default: c)")
    parser.add_argument("--trials", type=int, default=100,
                        help="number of randomized trials (default: 100)")
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (default: WEYLLAB_SEED or 0)")
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance (default: WEYLLAB_TOL or the suite default)")
    parser.add_argument("--p", type=_parse_p, default=None,
                        help="exponent or comma list, fractions allowed, e.g. 4/3,3/2")
    parser.add_argument("--out", default=None, help="write the report to this path")
    parser.add_argument("--defect-table", default=None,
                        help="write the per-trial defect table to this path")
    return parser


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise WeyllabError(f"{name} must be an integer, got {raw!r}")


def _env_float(name: str):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise WeyllabError(f"{name} must be a number, got {raw!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        seed = args.seed if args.seed is not None else _env_int("WEYLLAB_SEED")
        tol = args.tol if args.tol is not None else _env_float("WEYLLAB_TOL")
        config = SuiteConfig(
            suite=args.suite,
            group=args.group,
            algebra=args.algebra,
            trials=args.trials,
            seed=0 if seed is None else seed,
            tol=tol,
            p=args.p,
            out=args.out,
            defect_table=args.defect_table,
        )
        report = run_suite(config)
    except (WeyllabError, OSError, ValueError) as exc:
        print(f"weyllab: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render())
    verdict = "pass" if report.passed else "FAIL"
    print(f"# {report.suite}: {verdict} in {report.duration:.3f}s", file=sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
