from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcenters.angles import HALF, ZERO, AngleQZ

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=48)


def test_normalization_and_convention():
    assert AngleQZ.of(Fraction(0)) == ZERO
    assert AngleQZ.of(Fraction(1, 2)) == HALF
    assert AngleQZ.of(Fraction(5, 4)) == AngleQZ(1, 4)
    assert AngleQZ.of(Fraction(-1, 3)) == AngleQZ(2, 3)
    assert ZERO.is_zero() and HALF.is_half()


def test_group_law_examples():
    assert AngleQZ(1, 4) + AngleQZ(1, 4) == HALF
    assert AngleQZ(2, 3) + AngleQZ(2, 3) == AngleQZ(1, 3)
    assert -AngleQZ(1, 4) == AngleQZ(3, 4)
    assert AngleQZ(1, 6).scaled(6) == ZERO


def test_order_is_denominator():
    assert AngleQZ(1, 4).order == 4
    assert AngleQZ(2, 3).order == 3
    assert ZERO.order == 1


def test_rejects_unreduced():
    with pytest.raises(ValueError):
        AngleQZ(2, 4)
    with pytest.raises(ValueError):
        AngleQZ(3, 2)
    with pytest.raises(ValueError):
        AngleQZ(1, -2)


@given(rationals, rationals)
def test_addition_matches_fractions(a, b):
    left = AngleQZ.of(a) + AngleQZ.of(b)
    assert left == AngleQZ.of(a + b)


@given(rationals)
def test_order_kills_angle(a):
    angle = AngleQZ.of(a)
    assert angle.scaled(angle.order).is_zero()
    if not angle.is_zero():
        assert not angle.scaled(angle.order - 1).is_zero() or angle.order == 1
