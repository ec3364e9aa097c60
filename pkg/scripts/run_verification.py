#!/usr/bin/env python3
"""Sweep every verification suite over a range of ambient dimensions.

Prints one summary line per (dimension, suite) pair and exits nonzero if
any property fails. For the full per-property breakdown use the CLI:
``supercliff verify --suite all --dim 6 --trials 100``.
"""

import argparse

from supercliff.verify import run_suite

SUITES = ("duality", "expectation", "intersection", "stabilization", "cstar")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    failed = 0
    for dim in args.dims:
        for suite in SUITES:
            report = run_suite(suite, dim, args.trials, args.seed)
            worst = max(p.max_residual for p in report.properties)
            status = "PASS" if report.ok else "FAIL"
            print(
                f"dim={dim} suite={suite:<13} trials={args.trials} "
                f"worst_residual={worst:.3e} {status}"
            )
            failed += 0 if report.ok else 1
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
