"""Run every exact symbolic check and print one line each.

    python3 scripts/run_checks.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from rtm.checks import all_checks, reset_caches


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--quick", action="store_true", help="smaller ranges")
    args = p.parse_args()
    reset_caches()
    start = time.perf_counter()
    results = all_checks(quick=args.quick)
    for r in results:
        print(r.line())
    print(f"{sum(r.passed for r in results)}/{len(results)} passed in {time.perf_counter() - start:.1f}s")
    raise SystemExit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
