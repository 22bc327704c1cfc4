"""Run the verification suites and write their reports to a file.

    python scripts/run_suites.py --max-n 3 --seed 0 --out suites.txt
    python scripts/run_suites.py --corrupt          # planted bugs: every suite should fail
"""
from __future__ import annotations

import argparse
import sys

from stabcat.suites import SUITES, SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", default=list(SUITES), help=f"any of {', '.join(SUITES)}")
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random-count", type=int, default=200)
    ap.add_argument("--stable-pairs", type=int, default=500)
    ap.add_argument("--corrupt", action="store_true")
    ap.add_argument("--out")
    args = ap.parse_args()
    unknown = [s for s in args.suites if s not in SUITES]
    if unknown:
        ap.error(f"unknown suites {unknown}")
    cfg = SuiteConfig(max_n=args.max_n, seed=args.seed, random_count=args.random_count,
                      stable_pairs=args.stable_pairs, corrupt=args.corrupt)
    lines, ok = [f"# config {cfg}"], True
    for name in args.suites:
        report = run_suite(name, cfg)
        print(report.render(), flush=True)
        lines.append(report.render())
        ok &= report.ok
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    # With --corrupt, success means every suite caught its bug.
    return 0 if ok != args.corrupt else 2


if __name__ == "__main__":
    sys.exit(main())
