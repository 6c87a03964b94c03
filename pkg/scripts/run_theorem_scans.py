"""Exhaustive minimiser scans for the three extremal results at desk scale.

Writes one JSON report per (suite, n, k) into --out and prints a summary table.

    python3 scripts/run_theorem_scans.py --out results/theorems --jobs 4
"""

import argparse
import logging
import time
from pathlib import Path

from distext.verify import verify_theorem1, verify_theorem2, verify_theorem3

CASES = {
    "theorem1": (verify_theorem1, [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)]),
    "theorem2": (verify_theorem2, [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 1)]),
    "theorem3": (verify_theorem3, [(4, 2), (5, 1), (5, 3), (6, 2), (6, 4), (7, 1), (7, 3)]),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results/theorems"))
    parser.add_argument("--suite", choices=sorted(CASES), action="append", help="repeatable; default all")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    args.out.mkdir(parents=True, exist_ok=True)
    print(f"{'suite':<9} {'n':>2} {'k':>2} {'scanned':>8} {'pool':>6} {'radius':>16} {'gap':>14} {'time':>7}  status")
    all_passed = True
    for suite in args.suite or sorted(CASES):
        verify, cases = CASES[suite]
        for n, k in cases:
            t0 = time.perf_counter()
            report = verify(n, k, jobs=args.jobs)
            elapsed = time.perf_counter() - t0
            (args.out / f"{suite}_n{n}_k{k}.json").write_text(report.to_json() + "\n")
            m = report.minimizer or {}
            gap = "-" if m.get("gap") is None else f"{m['gap']:.10f}"
            radius = f"{m['radius']:.10f}" if m else "-"
            status = "PASS" if report.passed else "FAIL"
            all_passed &= report.passed
            print(f"{suite:<9} {n:>2} {k:>2} {report.graphs_scanned:>8} {report.notes.get('pool_size', 0):>6} {radius:>16} {gap:>14} {elapsed:>6.1f}s  {status}")
    raise SystemExit(0 if all_passed else 1)


if __name__ == "__main__":
    main()
