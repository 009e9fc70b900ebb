from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rrmod.qseries import NonInvertibleError, PuiseuxSeries

from strategies import series, units

q = PuiseuxSeries.monomial(1, 40)


def naive_terms(s):
    return {e: c for e, c in s.terms()}


def test_geometric_inverse():
    inv = (1 - q).invert()
    assert all(inv[k] == 1 for k in range(40))
    assert inv.precision == 40


def test_fractional_exponents_and_str():
    s = PuiseuxSeries.monomial(Fraction(1, 5), 3) * (1 - q)
    assert s[Fraction(1, 5)] == 1 and s[Fraction(6, 5)] == -1
    assert str(PuiseuxSeries.polynomial([1, -2, 0, 3], 4)) == "1 - 2*q + 3*q^3 + O(q^4)"


def test_coefficient_past_truncation_raises():
    with pytest.raises(IndexError):
        PuiseuxSeries.polynomial([1, 2], 2)[2]


def test_zero_is_not_invertible():
    with pytest.raises(NonInvertibleError):
        PuiseuxSeries.polynomial([0, 0], 2).invert()


def test_scale_argument():
    s = PuiseuxSeries.polynomial([1, 1, 1], 3).scale_argument(3)
    assert s.precision == 9 and s[3] == 1 and s[1] == 0


@given(series(), series())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(series(), series(), series())
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(series(), series())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(series(), series(), series())
def test_mul_associates(a, b, c):
    assert ((a * b) * c).agrees(a * (b * c))


@given(series(), series(), series())
def test_distributive(a, b, c):
    assert ((a + b) * c).agrees(a * c + b * c)


@given(units())
def test_inverse(u):
    one = u * u.invert()
    assert one.agrees(PuiseuxSeries.one(one.precision))
    assert one.precision == u.rel_precision


@given(series(), series())
def test_truncation_soundness(a, b):
    # every coefficient a product claims to know is already determined by the inputs
    p = a * b
    for e, c in p.terms():
        total = sum(
            ca * cb for ea, ca in a.terms() for eb, cb in b.terms() if ea + eb == e
        )
        assert total == c
    # and the coefficient just below the bound does not depend on what was dropped
    if not a.is_zero() and not b.is_zero():
        pad = PuiseuxSeries(a.denom, a.val, list(a.coeffs) + [0] * (a.trunc - a.val - len(a.coeffs)) + [7], a.trunc + 1)
        assert (pad * b).truncate(p.precision) == p


@given(units(), st.integers(-3, 4))
def test_power_matches_repeated_product(u, e):
    if e >= 0:
        ref = PuiseuxSeries.one(u.rel_precision)
        for _ in range(e):
            ref = ref * u
    else:
        ref = PuiseuxSeries.one(u.rel_precision)
        for _ in range(-e):
            ref = ref * u.invert()
    assert (u**e).agrees(ref)


@given(series(), st.integers(1, 4))
def test_scale_argument_homomorphism(a, n):
    assert (a * a).scale_argument(n).agrees(a.scale_argument(n) * a.scale_argument(n))


@given(series())
def test_json_round_trip(a):
    assert PuiseuxSeries.from_json(a.to_json()) == a
