#!/usr/bin/env python3
"""Derive modular equations for l(tau) and compare with the tabulated ones.

    python scripts/modular_equations.py            # levels 2 3 4 5 6 7 11 13
    python scripts/modular_equations.py 9 17 --T 200
"""

import argparse
import time

from rrmod.modeq import (
    check_kronecker, check_symmetry, check_zero_pattern, derive_modeq, known_modeq, psi, verify_modeq,
)
from rrmod._tables import KNOWN_MODEQ


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("levels", nargs="*", type=int, default=[2, 3, 4, 5, 6, 7, 11, 13])
    ap.add_argument("--T", type=int, default=300, help="series check bound")
    ap.add_argument("--show", action="store_true", help="print each equation")
    args = ap.parse_args()

    print(f"{'n':>3} {'bidegree':>9} {'psi':>4} {'terms':>6} {'table':>6} {'q^T':>5} {'prime':>6} {'sec':>7}")
    for n in args.levels:
        t = time.perf_counter()
        L = derive_modeq(n)
        table = "-" if n not in KNOWN_MODEQ else "ok" if L == known_modeq(n) else "DIFF"
        series = "ok" if verify_modeq(L, n, args.T) else "FAIL"
        prime = "-"
        if n > 2 and n != 5 and all(n % p for p in range(2, int(n**0.5) + 1)):
            good = check_symmetry(L, n) and check_kronecker(L, n) and check_zero_pattern(L, n)
            prime = "ok" if good else "FAIL"
        dt = time.perf_counter() - t
        print(f"{n:>3} {str(L.bidegree):>9} {psi(n):>4} {len(L.coeffs):>6} {table:>6} {series:>5} {prime:>6} {dt:>7.2f}")
        if args.show:
            print(f"    L_{n} = {L}")


if __name__ == "__main__":
    main()
