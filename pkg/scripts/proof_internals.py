"""Tabulate the quantities behind the G^(s) and B^(s) comparisons.

For each (n, k) prints the extremal radius, the Perron part values, and per s the
radius gap next to the Rayleigh lower bound x^T (D_s - D*) x computed from the
extremal Perron vector.

    python3 scripts/proof_internals.py --k-max 4 --n-max 8
"""

import argparse

from distext.verify import scan_s_range_bipartite, scan_s_range_general


def show_general(n, k):
    report = scan_s_range_general(n, k)
    notes = report.notes
    print(f"\nG(n={n}, k={k})  radius*={notes['radius']:.10f}  a={notes['a']:.6f} b={notes['b']:.6f} c={notes['c']:.6f}  min row sum={notes['min_row_sum']}")
    if "phi_s_at_radius" in notes:
        print(f"  phi_s(radius*) = {notes['phi_s_at_radius']:.6f}")
    for row in notes["s_rows"]:
        print(f"  s={row['s']:>2}  gap={row['gap']:.8f}  bound={row['bound']:+.8f}  (4n-3s+2k-3)b-2c={row['inequality1']:+.6f}")
    return report.passed


def show_bipartite(n, k):
    report = scan_s_range_bipartite(n, k)
    notes = report.notes
    print(
        f"\nB(n={n}, k={k})  radius*={notes['radius']:.10f}  a1={notes['a1']:.6f} b1={notes['b1']:.6f} "
        f"a2={notes['a2']:.6f} b2={notes['b2']:.6f}  min row sum={notes['min_row_sum']}"
    )
    if "phi2_at_radius" in notes:
        print(f"  phi2(radius*) = {notes['phi2_at_radius']:.6f}")
    for row in notes["s_rows"]:
        line = f"  s={row['s']:>2}  mirror isomorphic={row['mirror_isomorphic']}"
        if "gap" in row:
            line += f"  gap={row['gap']:.8f}  bound={row['bound']:+.8f}"
        print(line)
    return report.passed


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--family", choices=["general", "bipartite", "both"], default="both")
    args = parser.parse_args()

    ok = True
    for k in range(1, args.k_max + 1):
        for n in range(k + 1, args.n_max + 1):
            if args.family in ("general", "both"):
                ok &= show_general(n, k)
            if args.family in ("bipartite", "both"):
                ok &= show_bipartite(n, k)
    print("\nall checks passed" if ok else "\nsome checks FAILED")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
