#!/usr/bin/env python3
"""Run the property harness over several seeds and print one line per property."""
import argparse
import time

from zcat import harness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suite", nargs="?", default="all", choices=harness.SUITES + ("all",))
    ap.add_argument("--seeds", type=int, default=1, help="number of seeds, starting at 0")
    args = ap.parse_args()
    ok = True
    for seed in range(args.seeds):
        names = harness.SUITES if args.suite == "all" else (args.suite,)
        for suite in names:
            t0 = time.perf_counter()
            results = harness.run_suite(suite, seed)
            dt = time.perf_counter() - t0
            for r in results:
                ok &= r.passed
                status = "ok  " if r.passed else "FAIL"
                print(f"seed {seed} {status} {suite}/{r.name}: {r.cases} cases"
                      + ("" if r.passed else f"  -> {r.counterexample}"))
            print(f"seed {seed} {suite}: {dt:.1f}s")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
