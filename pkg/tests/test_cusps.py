from math import gcd

import pytest
from hypothesis import given, strategies as st

from rrmod.cusps import (
    Cusp,
    GroupDesc,
    INFINITY,
    canonical_cusp,
    cusp_count,
    cusp_equivalent,
    cusp_equivalent_search,
    cusp_width,
    enumerate_cusps,
    matrix_to,
)

from oracles import cusp_orbits, orbit_of, width_by_search

SMALL = [(N, m) for N in range(1, 31) for m in range(1, 31) if N * m <= 30]


def group(N, m):
    if N == 1:
        return GroupDesc.gamma0(m)
    return GroupDesc.mixed(N, m) if m > 1 else GroupDesc.gamma1(N)


@pytest.mark.parametrize("N,m", SMALL)
def test_cusps_against_orbit_oracle(N, m):
    G, M = group(N, m), N * m
    orbits = cusp_orbits(N, m)
    reps = enumerate_cusps(G)
    assert len(reps) == len(orbits) == cusp_count(G)
    assert sorted(orbit_of(orbits, x.a, x.c, max(M, 1)) for x in reps) == list(range(len(orbits)))


@pytest.mark.parametrize("N,m", SMALL)
def test_widths_against_search(N, m):
    G = group(N, m)
    for x in enumerate_cusps(G):
        assert cusp_width(G, x) == width_by_search(N, m, x.a, x.c), x


def test_gamma1_10_listed_classes():
    G = GroupDesc.gamma1(10)
    listed = [Cusp.parse(s) for s in ("oo", "0", "1/2", "1/3", "1/5", "1/6", "3/5", "3/10")]
    reps = enumerate_cusps(G)
    assert len(reps) == 8
    for x in reps:
        assert sum(cusp_equivalent(G, x, y) for y in listed) == 1
    assert len(enumerate_cusps(GroupDesc.gamma0(10))) == 4


def test_known_widths():
    assert cusp_width(GroupDesc.mixed(10, 2), Cusp(3, 10)) == 1
    assert cusp_width(GroupDesc.mixed(10, 5), Cusp(1, 25)) == 2
    for p in (3, 7, 13):
        assert cusp_width(GroupDesc.mixed(10, p), Cusp(1, 5)) == 2 * p


def test_parse_and_str():
    assert Cusp.parse("oo") == INFINITY
    assert Cusp.parse("1/-2") == Cusp(-1, 2)
    assert str(Cusp(3, 10)) == "3/10"
    with pytest.raises(ValueError):
        Cusp.parse("-2/4")


@st.composite
def group_and_cusp(draw):
    N, m = draw(st.sampled_from(SMALL))
    c = draw(st.integers(0, 60))
    a = draw(st.integers(-60, 60).filter(lambda a: gcd(a, c) == 1))
    return group(N, m), Cusp(a, c)


@given(group_and_cusp(), group_and_cusp())
def test_equivalence_agrees_with_search(gx, gy):
    G, x = gx
    _, y = gy
    assert cusp_equivalent(G, x, y) == cusp_equivalent_search(G, x, y)


@given(group_and_cusp())
def test_canonical_is_equivalent_and_idempotent(gx):
    G, x = gx
    r = canonical_cusp(G, x)
    assert cusp_equivalent(G, x, r)
    assert canonical_cusp(G, r) == r
    assert r in enumerate_cusps(G)


@given(group_and_cusp())
def test_matrix_to(gx):
    _, x = gx
    (a, b), (c, d) = matrix_to(x)
    assert a * d - b * c == 1
    assert Cusp(a, c) == x
