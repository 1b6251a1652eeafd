"""``ncsphere-verify``: run verification suites and print a report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .verify import SUITES, Options, emit_report, parse_oracle, run_suite


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncsphere-verify", description="Exact checks for the deformed 4-sphere.")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--oracle", metavar="N=<int>,theta=<p/q>", help="run numeric cross-checks with these settings")
    p.add_argument("--degree", type=int, default=3, help="membership degree bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--golden", type=Path, help="ch2 fixture to compare against")
    return p


def main(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    N, theta = 5, None
    if args.oracle:
        try:
            N, theta = parse_oracle(args.oracle)
        except ValueError as exc:
            parser.print_usage(sys.stderr)
            print(f"ncsphere-verify: error: {exc}", file=sys.stderr)
            return 2
    if args.degree < 2:
        print("ncsphere-verify: error: --degree must be at least 2", file=sys.stderr)
        return 2
    opts = Options(N=N, degree=args.degree, seed=args.seed, golden=args.golden)
    if theta is not None:
        opts = Options(N=N, theta=theta, degree=args.degree, seed=args.seed, golden=args.golden)
    # the oracle suite is numeric by nature; other suites add numeric checks on request
    records = run_suite(args.suite, opts, oracle=args.oracle is not None or args.suite in ("oracle", "all"))
    print(emit_report(records, args.report))
    return 1 if any(r.status == "fail" for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
