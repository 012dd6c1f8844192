"""Tests for Bernoulli numbers."""

from fractions import Fraction

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.special import bernoulli


def test_small_values() -> None:
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_odd_indices_vanish() -> None:
    assert bernoulli(3) == 0
    assert bernoulli(39) == 0


def test_range() -> None:
    assert bernoulli(40) == Fraction(-261082718496449122051, 13530)
    with pytest.raises(ParameterError):
        bernoulli(41)
    with pytest.raises(ParameterError):
        bernoulli(-1)
