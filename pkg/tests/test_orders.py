from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st
from mpmath import log, mp, pi

from rrmod.cusps import Cusp, GroupDesc, cusp_width, enumerate_cusps, matrix_to
from rrmod.etaforms import EtaQuotient, K_QUOTIENT, L_QUOTIENT, check_newman, rab_quotient
from rrmod.numeric import BigComplex, apply_matrix, eval_product
from rrmod.orders import (
    classify_pole_zero,
    hermite_split,
    order_at_cusp,
    order_table,
)

G1 = GroupDesc.gamma1(10)


def expected_rab(a, b, x):
    s, t = Fraction(a + 2 * b, 5), Fraction(2 * a - b, 5)
    table = {Cusp(1, 0): s, Cusp(1, 5): t, Cusp(3, 5): -t, Cusp(3, 10): -s}
    from rrmod.cusps import cusp_equivalent

    return next((o for y, o in table.items() if cusp_equivalent(G1, x, y)), Fraction(0))


@pytest.mark.parametrize("a,b", [(1, 2), (-2, 1), (5, 0), (3, -1)])
def test_rab_orders_known(a, b):
    tab = order_table(rab_quotient(a, b), G1)
    for x in enumerate_cusps(G1):
        assert tab[x] == expected_rab(a, b, x), x
    assert tab.degree() == 0


def numeric_order(spec, G, x, ys=("5", "8"), prec=64):
    """Slope of -log|f(g (iy))| in 2 pi y / width; an independent estimate of the order."""
    g, h = matrix_to(x), cusp_width(G, x)
    vals = []
    with mp.workprec(prec):
        for y in ys:
            tau = BigComplex.parse(y + "i", prec)
            vals.append(log(abs(eval_product(spec, apply_matrix(g, tau), prec).value)))
        return float(-(vals[1] - vals[0]) * h / (2 * pi * (int(ys[1]) - int(ys[0]))))


@pytest.mark.parametrize(
    "spec,G",
    [(L_QUOTIENT, G1), (K_QUOTIENT, G1), (L_QUOTIENT.scaled(2), GroupDesc.mixed(10, 2))],
    ids=["l", "k", "l(2tau)"],
)
def test_orders_match_numeric_slopes(spec, G):
    tab = order_table(spec, G)
    for x in enumerate_cusps(G):
        assert abs(numeric_order(spec, G, x) - tab[x]) < 0.2, x


@pytest.mark.parametrize("n", range(1, 14))
def test_divisor_degree_zero(n):
    G = GroupDesc.mixed(10, n)
    for spec in (L_QUOTIENT, L_QUOTIENT.scaled(n)):
        assert order_table(spec, G).degree() == 0


@pytest.mark.parametrize("n", range(1, 14))
def test_pole_zero_classification(n):
    G = GroupDesc.mixed(10, n)
    tab = order_table(L_QUOTIENT.scaled(n), G)
    for x in enumerate_cusps(G):
        o = tab[x]
        want = "pole" if o < 0 else "zero" if o > 0 else "neither"
        assert classify_pole_zero(n, x) == want, (n, x)


@st.composite
def eta_quotients(draw):
    N = draw(st.sampled_from([4, 6, 10, 12]))
    divs = [d for d in range(1, N + 1) if N % d == 0]
    exps = {d: draw(st.integers(-6, 6)) for d in divs}
    exps = {d: r for d, r in exps.items() if r} or {1: 1}
    return EtaQuotient(N, exps)


def gamma0_index(N):
    out, n, p = N, N, 2
    while n > 1:
        if n % p == 0:
            out = out * (p + 1) // p
            while n % p == 0:
                n //= p
        p += 1
    return out


@given(eta_quotients())
def test_closed_form_matches_matrix_path(spec):
    G = GroupDesc.gamma0(spec.level)
    for x in enumerate_cusps(G):
        a = order_at_cusp(spec, G, x)
        b = order_at_cusp(spec, G, x, gamma=matrix_to(x))
        assert a == b


@given(eta_quotients())
def test_valence_formula(spec):
    # orders add up to (weight / 12) * index, whether or not the quotient is modular
    N = spec.level
    tab = order_table(spec, GroupDesc.gamma0(N))
    assert tab.degree() == spec.weight * gamma0_index(N) / 12
    if check_newman(spec):
        assert all(o.denominator == 1 for o in tab.entries.values())


@given(
    st.integers(1, 13),
    st.integers(-40, 40),
    st.integers(-40, 40).filter(lambda c: c != 0),
)
def test_hermite_split(n, a, c):
    if gcd(a, c) != 1:
        return
    x = matrix_to(Cusp(a, c))
    g1, (A, B, C) = hermite_split(n, x)
    (p, q), (r, s) = g1
    assert p * s - q * r == 1
    assert A * C == n and A > 0 and 0 <= B < C
    # [[n,0],[0,1]] x == g1 [[A,B],[0,C]]
    assert ((n * x[0][0], n * x[0][1]), x[1]) == ((p * A, p * B + q * C), (r * A, r * B + s * C))
