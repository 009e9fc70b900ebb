"""The full battery of checks behind ``rrmod verify-suite``."""

from __future__ import annotations

from fractions import Fraction

from .cusps import Cusp, GroupDesc, cusp_equivalent, cusp_width, enumerate_cusps
from .identities import Report, identity_suite


def rab_expected_orders(a: int, b: int) -> dict[Cusp, Fraction]:
    """The expected orders of r^a r(2tau)^b on Gamma1(10) (other cusps: 0)."""
    s, t = Fraction(a + 2 * b, 5), Fraction(2 * a - b, 5)
    return {Cusp(1, 0): s, Cusp(1, 5): t, Cusp(3, 5): -t, Cusp(3, 10): -s}


def check_rab_orders(a: int, b: int) -> bool:
    from .etaforms import rab_quotient
    from .orders import order_table

    G = GroupDesc.gamma1(10)
    tab = order_table(rab_quotient(a, b), G)
    expected = rab_expected_orders(a, b)
    for x in enumerate_cusps(G):
        want = next((o for y, o in expected.items() if cusp_equivalent(G, x, y)), Fraction(0))
        if tab[x] != want:
            return False
    return True


def run_suite(quick: bool = False, prec: int = 192) -> Report:
    from mpmath import mp

    from .classfield import class_polynomial, singular_value, eval_rab_at
    from .etaforms import L_QUOTIENT, l_series, r_series
    from .modeq import check_kronecker, check_symmetry, check_zero_pattern, derive_modeq, known_modeq, verify_modeq
    from .numeric import check_transformations, eval_product
    from .orders import order_table
    from .qseries import PuiseuxSeries

    rep = Report()

    rep.add("l = 1 + 2q - 4q^3 - 2q^4 + 6q^5 + 8q^6 - 4q^7 + O(q^8)",
            l_series(8) == PuiseuxSeries.polynomial([1, 2, 0, -4, -2, 6, 8, -4], 8))
    rep.add("r^5 = q - 5q^2 + 15q^3 - 30q^4 + 40q^5 - 26q^6 + O(q^7)",
            (r_series(7) ** 5).truncate(7) == PuiseuxSeries.polynomial([0, 1, -5, 15, -30, 40, -26], 7))

    G1, G0 = GroupDesc.gamma1(10), GroupDesc.gamma0(10)
    listed = [Cusp.parse(s) for s in ("oo", "0", "1/2", "1/3", "1/5", "1/6", "3/5", "3/10")]
    reps = enumerate_cusps(G1)
    rep.add("Gamma1(10) has the 8 listed cusp classes",
            len(reps) == 8 and all(sum(cusp_equivalent(G1, x, y) for y in listed) == 1 for x in reps))
    rep.add("Gamma0(10) has 4 cusps", len(enumerate_cusps(G0)) == 4)
    rep.add("width of 3/10 on Gamma1(10) cap Gamma0(20) is 1", cusp_width(GroupDesc.mixed(10, 2), Cusp(3, 10)) == 1)
    rep.add("width of 1/25 on Gamma1(10) cap Gamma0(50) is 2", cusp_width(GroupDesc.mixed(10, 5), Cusp(1, 25)) == 2)
    for p in (3, 7, 13):
        rep.add(f"width of 1/5 on Gamma1(10) cap Gamma0({10 * p}) is {2 * p}",
                cusp_width(GroupDesc.mixed(10, p), Cusp(1, 5)) == 2 * p)

    for a, b in ((1, 2), (-2, 1), (5, 0), (3, -1)):
        rep.add(f"orders of r^{a} r(2tau)^{b} on Gamma1(10)", check_rab_orders(a, b))
    for n in range(1, 14):
        G = GroupDesc.mixed(10, n)
        rep.add(f"divisors of l and l({n} tau) on {G} have degree 0",
                order_table(L_QUOTIENT, G).degree() == 0 and order_table(L_QUOTIENT.scaled(n), G).degree() == 0)

    levels = (2, 4, 5, 6) if quick else (2, 4, 5, 6, 13)
    T = 120 if quick else 300
    for n in levels:
        L = derive_modeq(n)
        rep.add(f"L_{n} matches the tabulated equation", L == known_modeq(n))
        rep.add(f"L_{n} holds through q^{T}", verify_modeq(L, n, T))
    for p in ((3, 7, 11) if quick else (3, 7, 11, 13)):
        L = derive_modeq(p)
        rep.add(f"L_{p}: zero pattern", check_zero_pattern(L, p))
        rep.add(f"L_{p}: symmetry", check_symmetry(L, p))
        rep.add(f"L_{p}: Kronecker congruence", check_kronecker(L, p))

    for name, ok in identity_suite(120).checks.items():
        rep.add(name, ok)

    p = max(prec, 192)
    with mp.workprec(p):
        li = eval_product("l", "i", p).value.real
        lh = eval_product("l", "i/2", p).value.real
        ri = eval_product("r", "i", p).value.real
        closed = mp.sqrt((5 + mp.sqrt(5)) / 2) - (mp.sqrt(5) + 1) / 2
        rep.add("l(i) = 1.00373486", abs(li - mp.mpf("1.00373486")) < 5e-9)
        rep.add("l(i/2) = 1.08609902", abs(lh - mp.mpf("1.08609902")) < 5e-9)
        rep.add("r(i) closed form to 1e-30", abs(ri - closed) < mp.mpf(10) ** -30)
    rep.add("l(g tau) l(tau) = -1, F(a,b) sign law", check_transformations(128, samples=8 if quick else 20))

    F = class_polynomial(-4, 10, 256)
    rep.add("F_10 for d_K = -4", F.coeffs == [1, 26, 62, 458, -130, -458, 62, -26, 1] and F.residual < 1e-10)
    v1, _ = eval_rab_at(-4, -1, 3, p)
    v2, _ = eval_rab_at(-4, -7, 1, p)
    rep.add("r(2i)^3/r(i) = 0.00187091", abs(v1.value - mp.mpf("0.00187091")) < 1e-8)
    rep.add("r(2i)/r(i)^7 = 542.52907744", abs(v2.value - mp.mpf("542.52907744")) < 1e-6)
    if not quick:
        for d in (-8, -20):
            Fd = class_polynomial(d, 10, 256)
            sv = singular_value(d, 256)
            rep.add(f"F_10 for d_K = {d}: unit constant term, l(theta) is a root",
                    abs(Fd.coeffs[-1]) == 1 and Fd.residual < 1e-10 and sv.error_bound < 1e-30)
    return rep
