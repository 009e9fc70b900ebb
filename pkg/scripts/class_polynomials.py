#!/usr/bin/env python3
"""Class polynomials F_10 of l at sqrt(d_K)/2 and the singular values they certify."""

import argparse
import time

from mpmath import mp

from rrmod.classfield import class_number, class_polynomial, eval_rab_at, propagate_level2, singular_value
from rrmod.numeric import eval_product


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("discs", nargs="*", type=int, default=[-4, -8, -20, -24, -36])
    ap.add_argument("--prec", type=int, default=256)
    ap.add_argument("--full", action="store_true", help="print every polynomial in full")
    args = ap.parse_args()

    for d in args.discs:
        t = time.perf_counter()
        F = class_polynomial(d, 10, args.prec)
        sv = singular_value(d, args.prec)
        dt = time.perf_counter() - t
        print(f"d_K={d}: h={class_number(d)} deg={F.degree} const={F.coeffs[-1]} residual={F.residual:.1e}"
              f" prec={F.prec} ({dt:.2f} s)")
        shown = F.format()
        print("   F_10 =", shown if args.full or len(shown) < 200 else shown[:200] + " ...")
        print(f"   l(theta) = {sv.value.to_string(30)}  (Newton bound {sv.error_bound:.1e})")

    print("\nat tau = i")
    for a, b, label in ((-1, 3, "r(2i)^3/r(i)"), (-7, 1, "r(2i)/r(i)^7")):
        via_l, direct = eval_rab_at(-4, a, b, args.prec)
        with mp.workprec(args.prec):
            gap = abs(via_l.value - direct.value)
        print(f"   {label:<14} = {via_l.to_string(20)}   (direct product differs by {float(gap):.1e})")
    li = eval_product("l", "i", args.prec)
    half = propagate_level2(li, "i", "halve", args.prec)
    print(f"   l(i/2) from the level-2 equation = {half.to_string(20)}")


if __name__ == "__main__":
    main()
