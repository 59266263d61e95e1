from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metricat.weight import INF, ZERO, Weight


def test_parse_forms():
    assert Weight.parse("3/2").finite == Fraction(3, 2)
    assert Weight.parse(2).finite == 2
    assert Weight.parse("1.5").finite == Fraction(3, 2)
    assert Weight.parse("inf").is_infinite
    assert Weight.parse(float("inf")).is_infinite
    # floats convert to their exact binary value, no decimal rounding
    assert Weight.parse(0.5).finite == Fraction(1, 2)
    assert Weight.parse(0.1).finite == Fraction(0.1)


def test_parse_rejects():
    with pytest.raises(ValueError):
        Weight.parse("-1")
    with pytest.raises(ValueError):
        Weight.parse(True)
    with pytest.raises(ValueError):
        Weight.parse(None)


def test_addition_infinity_conventions():
    w = Weight(Fraction(3, 2))
    assert (w + INF).is_infinite
    assert (INF + w).is_infinite
    assert (INF + INF).is_infinite
    assert (w + w).finite == 3


def test_comparisons():
    assert ZERO < Weight(1) < INF
    assert INF <= INF
    assert not (INF < INF)
    assert max(Weight(1), Weight(Fraction(1, 2))) == Weight(1)


def test_abs_diff():
    assert Weight.abs_diff(Weight(5), Weight(2)) == Weight(3)
    assert Weight.abs_diff(Weight(2), Weight(5)) == Weight(3)
    assert Weight.abs_diff(INF, Weight(2)).is_infinite
    assert Weight.abs_diff(Weight(2), INF).is_infinite
    with pytest.raises(ArithmeticError):
        Weight.abs_diff(INF, INF)


def test_scale():
    assert Weight(4).scale(Fraction(1, 2)) == Weight(2)
    assert INF.scale(Fraction(1, 2)).is_infinite
    with pytest.raises(ArithmeticError):
        INF.scale(Fraction(0))


def test_json_round_trip():
    for w in (ZERO, Weight(Fraction(7, 3)), INF):
        assert Weight.parse(w.to_json()) == w


fractions = st.fractions(min_value=0, max_value=100)


@given(fractions, fractions, fractions)
def test_triangle_of_finite_weights_matches_rationals(a, b, c):
    wa, wb, wc = Weight(a), Weight(b), Weight(c)
    assert (wc <= wa + wb) == (c <= a + b)
    assert (Weight.abs_diff(wa, wb) <= wc) == (abs(a - b) <= c)
