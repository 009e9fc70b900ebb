#!/usr/bin/env python3
"""Check the q-series identities for r, l, f and j, and print the derived relations."""

import argparse

from rrmod.identities import derive_f_from_l, express_fab, find_generating_pairs, identity_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--T", type=int, default=120)
    args = ap.parse_args()

    print("generating pairs:", sorted(find_generating_pairs()))
    for a, b in ((5, 0), (3, 1), (-1, 3), (4, -2), (1, 2)):
        c = express_fab(a, b)
        print(f"u^{abs(a + 2 * b) // 5} f_({a},{b}) coefficients in u = l - 1/l: {[str(x) for x in c]}")
    F, fl = derive_f_from_l()
    print("F(f, u) = 0 with F =", F)
    print("f =", fl)
    rep = identity_suite(args.T)
    print()
    print(rep.format())
    print(f"{sum(rep.checks.values())}/{len(rep.checks)} identities hold through q^{args.T}")


if __name__ == "__main__":
    main()
