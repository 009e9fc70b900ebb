#!/usr/bin/env python3
"""Orders of r^a r(2tau)^b on Gamma1(10), and where l(n tau) has its poles."""

import argparse

from rrmod.cusps import GroupDesc, enumerate_cusps
from rrmod.etaforms import L_QUOTIENT, rab_quotient
from rrmod.orders import order_table


def rab_table(pairs):
    G = GroupDesc.gamma1(10)
    cusps = enumerate_cusps(G)
    print("orders on Gamma1(10)")
    print(f"{'(a,b)':>8} " + " ".join(f"{str(x):>6}" for x in cusps) + "  poles")
    for a, b in pairs:
        tab = order_table(rab_quotient(a, b), G)
        row = " ".join(f"{str(tab[x]):>6}" for x in cusps)
        try:
            deg = tab.total_pole_degree()
        except ValueError:
            deg = "n/a (a != 3b mod 5: not on Gamma1(10))"
        print(f"{str((a, b)):>8} {row}  {deg}")


def l_n_poles(levels):
    print("\npoles of l and l(n tau) on Gamma1(10) cap Gamma0(10n)")
    for n in levels:
        G = GroupDesc.mixed(10, n)
        t1, t2 = order_table(L_QUOTIENT, G), order_table(L_QUOTIENT.scaled(n), G)
        print(f"  n={n:<3} cusps={len(t1.entries):<3} deg l={t1.total_pole_degree():<3} deg l(n tau)={t2.total_pole_degree():<3}"
              f" poles of l(n tau): {', '.join(str(x) for x in t2.poles())}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--levels", type=int, nargs="*", default=[2, 3, 4, 5, 6, 7, 11, 13])
    args = ap.parse_args()
    rab_table([(1, 2), (-2, 1), (2, -1), (-1, -2), (5, 0), (3, 1), (3, -1), (-1, 3), (4, 3)])
    l_n_poles(args.levels)
