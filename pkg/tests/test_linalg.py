from fractions import Fraction

from hypothesis import given, strategies as st

from rrmod.linalg import nullspace, primitive, rank

from oracles import rref_rank

entry = st.one_of(st.integers(-20, 20), st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)))


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 7))
    m = draw(st.integers(0, 6))
    rows = [draw(st.lists(entry, min_size=n, max_size=n)) for _ in range(m)]
    # plant dependent rows now and then
    if m >= 2 and draw(st.booleans()):
        rows.append([2 * a - b for a, b in zip(rows[0], rows[1])])
    return rows, n


@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(mat):
    rows, n = mat
    basis = nullspace(rows, n) if rows else [primitive([int(i == j) for j in range(n)]) for i in range(n)]
    for v in basis:
        assert all(isinstance(x, int) for x in v)
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0
    r = rref_rank(rows) if rows else 0
    assert len(basis) == n - r
    if basis:
        assert rref_rank(basis) == len(basis)


@given(matrices())
def test_rank_matches_gauss_jordan(mat):
    rows, _ = mat
    if rows:
        assert rank(rows) == rref_rank(rows)


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
    assert primitive([0, 0]) == [0, 0]


def test_large_entries_stay_exact():
    big = 10**40
    rows = [[big, big + 1, 1], [big - 1, big, 1]]
    (v,) = nullspace(rows, 3)
    for r in rows:
        assert sum(a * b for a, b in zip(r, v)) == 0
