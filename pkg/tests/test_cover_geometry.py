import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from prym_hitchin.cover_geometry import (
    CoverData,
    Linearization,
    genus_upstairs,
    h0_canonical_power,
    h0_canonical_power_minus,
    h0_canonical_power_plus,
    h0_twisted_plus,
)
from prym_hitchin.errors import InadmissibleCover, OutOfValidityWindow

POS, NEG = Linearization.POSITIVE, Linearization.NEGATIVE


def admissible(g_Y, n):
    return 2 * g_Y - 1 + n >= 2


covers = st.tuples(st.integers(0, 8), st.integers(0, 8)).filter(lambda p: admissible(*p)).map(
    lambda p: CoverData.of(*p)
)


def riemann_roch_on_y(g_Y, degree):
    """h0 of a line bundle on Y of non-special degree (degree > 2 g_Y - 2)."""
    assert degree > 2 * g_Y - 2
    return degree - g_Y + 1


def test_genus_examples():
    assert genus_upstairs(CoverData(2, 1)) == 4
    assert genus_upstairs(CoverData(3, 0, etale=True)) == 5
    assert genus_upstairs(CoverData(1, 2)) == 3


def test_cover_validation():
    with pytest.raises(InadmissibleCover):
        CoverData(0, 0, etale=True)
    with pytest.raises(InadmissibleCover):
        CoverData(1, 0, etale=True)
    with pytest.raises(InadmissibleCover):
        CoverData(2, 0)  # etale flag must be set when n = 0
    with pytest.raises(InadmissibleCover):
        CoverData(2, 1, etale=True)
    with pytest.raises(InadmissibleCover):
        CoverData(-1, 4)
    assert CoverData(0, 3).g_X == 2
    assert CoverData(2, 1).to_json() == {"g_Y": 2, "n": 1, "etale": False}


def test_h0_plus_examples():
    assert h0_canonical_power_plus(CoverData(2, 1), 2, POS) == 5
    assert h0_canonical_power_plus(CoverData(3, 2), 1, NEG) == 3
    assert h0_canonical_power_plus(CoverData(2, 1), 3, NEG) == 7


def test_h0_rejects_nonpositive_power():
    with pytest.raises(ValueError):
        h0_canonical_power_plus(CoverData(2, 1), 0)


def test_twisted_examples():
    c = CoverData(2, 1)
    assert h0_twisted_plus(c, 2, 2) == 4
    assert h0_twisted_plus(c, 2, 0) == 5 == h0_canonical_power_plus(c, 2, NEG)
    assert h0_twisted_plus(c, 3, 1) == 7 == h0_canonical_power_plus(c, 3, NEG)


def test_twisted_window():
    c = CoverData(2, 1)
    assert h0_twisted_plus(c, 1, 0) == 2
    for k, i in [(1, 1), (2, 3), (3, -1), (4, 7)]:
        with pytest.raises(OutOfValidityWindow):
            h0_twisted_plus(c, k, i)


@given(covers, st.integers(2, 12))
def test_riemann_roch_split(c, i):
    for lin in (POS, NEG):
        plus = h0_canonical_power_plus(c, i, lin)
        minus = h0_canonical_power_minus(c, i, lin)
        assert plus + minus == (2 * i - 1) * (c.g_X - 1) == h0_canonical_power(c, i)


@given(covers, st.integers(2, 12))
def test_positive_lift_matches_pushforward(c, i):
    # pi_* K_X^i = K_Y^i D^i + K_Y^i D^(i-1) with deg D = n
    base = i * (2 * c.g_Y - 2)
    assert h0_canonical_power_plus(c, i, POS) == riemann_roch_on_y(c.g_Y, base + i * c.n)
    assert h0_canonical_power_minus(c, i, POS) == riemann_roch_on_y(c.g_Y, base + (i - 1) * c.n)


@given(covers)
def test_degree_one_split(c):
    assert h0_canonical_power_plus(c, 1, NEG) == c.g_Y
    assert h0_canonical_power_plus(c, 1, NEG) + h0_canonical_power_minus(c, 1, NEG) == c.g_X


@given(covers, st.integers(1, 10))
def test_twisted_monotone_with_unit_steps(c, k):
    assume(c.n > 0)
    values = [h0_twisted_plus(c, k, i) for i in range(2 * k - 1)]
    assert all(a - b in (0, 1) for a, b in zip(values, values[1:]))
    assert values[0] == h0_canonical_power_plus(c, k, NEG)


@given(st.integers(2, 8), st.integers(2, 10))
def test_etale_lifts_agree(g_Y, i):
    c = CoverData.of(g_Y, 0)
    assert h0_canonical_power_plus(c, i, POS) == h0_canonical_power_plus(c, i, NEG) == (2 * i - 1) * (g_Y - 1)
