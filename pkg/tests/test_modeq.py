from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpc

from rrmod.modeq import (
    BivarPoly,
    check_kronecker,
    check_symmetry,
    check_zero_pattern,
    derive_modeq,
    known_modeq,
    modeq_setup,
    psi,
    verify_modeq,
)
from rrmod.numeric import eval_product

TABULATED = (2, 4, 5, 6, 13)
PRIMES = (3, 7, 11, 13)


@pytest.fixture(scope="module")
def derived():
    return {n: derive_modeq(n) for n in sorted(set(TABULATED + PRIMES + (9,)))}


def test_level_two_text(derived):
    assert str(derived[2]) == "1 + X - 2*X*Y - X*Y^2 + X^2*Y^2"


def test_level_one():
    assert derive_modeq(1) == BivarPoly.X() - BivarPoly.Y()


@pytest.mark.parametrize("n", TABULATED)
def test_matches_tabulated(derived, n):
    assert derived[n] == known_modeq(n)


@pytest.mark.parametrize("n", TABULATED)
def test_series_check_through_300(derived, n):
    chk = verify_modeq(derived[n], n, 300)
    assert chk and chk.first_failure is None


@pytest.mark.parametrize("n", (2, 3, 7))
def test_unconstrained_rederivation_agrees(derived, n):
    # no zero pattern imposed, more equations than unknowns
    assert derive_modeq(n, extra_rows=40, constrained=False) == derived[n]


@pytest.mark.parametrize("n", (3, 7, 9, 11, 13))
def test_bidegree_is_psi(derived, n):
    assert derived[n].bidegree == (psi(n), psi(n))


@pytest.mark.parametrize("p", PRIMES)
def test_prime_level_structure(derived, p):
    L = derived[p]
    assert check_zero_pattern(L, p)
    assert check_symmetry(L, p)
    assert check_kronecker(L, p)


def test_kronecker_rejects_a_perturbation(derived):
    L = derived[7] + BivarPoly.X() * BivarPoly.Y()
    assert not check_kronecker(L, 7)


def test_perturbed_equation_fails_series_check(derived):
    bad = derived[2] + BivarPoly.X() * BivarPoly.Y() ** 2
    chk = verify_modeq(bad, 2, 60)
    assert not chk and chk.first_failure is not None


@pytest.mark.parametrize("n", (2, 3, 5))
def test_numerically_at_a_point(derived, n):
    # an oracle independent of the series code: the product values satisfy L_n
    prec = 160
    tau = mpc("0.137", "0.853")
    with mp.workprec(prec):
        x = eval_product("l", tau, prec).value
        y = eval_product("l", n * tau, prec).value
        L = derived[n]
        scale = sum(abs(c) * abs(x) ** i * abs(y) ** j for (i, j), c in L.coeffs.items())
        assert abs(L.evaluate(x, y)) < scale * mp.mpf(2) ** (-prec // 2)


def test_setup_row_count():
    s = modeq_setup(3)
    assert (s.d1, s.d2) == (4, 4)
    assert s.rows == (s.d1 + 1) * (s.d2 + 1) + 32


def test_psi():
    assert [psi(n) for n in (1, 2, 3, 4, 6, 9, 13)] == [1, 3, 4, 6, 12, 12, 14]


# ---- BivarPoly ----------------------------------------------------------------

coef = st.one_of(st.integers(-50, 50).filter(bool), st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(2, 7)))
bivar = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coef, max_size=8).map(BivarPoly)


@given(bivar)
def test_text_round_trip(P):
    assert BivarPoly.from_text(str(P)) == P


@given(bivar)
def test_json_round_trip(P):
    assert BivarPoly.from_json(P.to_json()) == P


@given(bivar, bivar, st.integers(-5, 5), st.integers(-5, 5))
def test_arithmetic_matches_evaluation(P, Q, x, y):
    assert (P * Q).evaluate(x, y) == P.evaluate(x, y) * Q.evaluate(x, y)
    assert (P + Q).evaluate(x, y) == P.evaluate(x, y) + Q.evaluate(x, y)
    assert P.swap().evaluate(x, y) == P.evaluate(y, x)


def test_parse_forms():
    P = BivarPoly.from_text("5*X*Y*(X^2 - 1) + 2Y - 1")
    assert P == 5 * BivarPoly.X() ** 3 * BivarPoly.Y() - 5 * BivarPoly.X() * BivarPoly.Y() + 2 * BivarPoly.Y() - 1
