"""Full verification sweep: every instance checked by both algorithms and the oracle.

    python scripts/run_sweep.py [--dims 1..6] [--instances 500] [--seed 0] [--jobs 1]
"""

import argparse
import sys
import time

from radon_partition.harness import fuzz, parse_dims


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", default="1..6")
    ap.add_argument("--instances", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    start = time.perf_counter()
    summary = fuzz(parse_dims(args.dims), args.instances, args.seed, bound=args.bound, jobs=args.jobs)
    print(summary.table())
    bad_certs = sum(o.certificate_violations for o in summary.outcomes)
    print(f"certificate violations: {bad_certs}")
    print(f"wall time: {time.perf_counter() - start:.1f}s")
    return 0 if summary.all_passed and not bad_certs else 1


if __name__ == "__main__":
    sys.exit(main())
