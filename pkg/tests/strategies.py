"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from rrmod.qseries import PuiseuxSeries

small_coeff = st.one_of(
    st.integers(-9, 9),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6)),
)


@st.composite
def series(draw, denoms=(1, 2, 5), min_len=0, max_len=7):
    D = draw(st.sampled_from(denoms))
    val = draw(st.integers(-4, 4))
    cs = draw(st.lists(small_coeff, min_size=min_len, max_size=max_len))
    extra = draw(st.integers(0, 3))
    return PuiseuxSeries(D, val, cs, val + len(cs) + extra)


@st.composite
def units(draw, denoms=(1, 2, 5)):
    """Series with a nonzero leading coefficient and some relative precision."""
    D = draw(st.sampled_from(denoms))
    val = draw(st.integers(-3, 3))
    lead = draw(small_coeff.filter(bool))
    rest = draw(st.lists(small_coeff, max_size=6))
    return PuiseuxSeries(D, val, [lead, *rest], val + 1 + len(rest) + draw(st.integers(0, 2)))
