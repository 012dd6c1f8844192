"""Tests for scalar helpers."""

from fractions import Fraction

from hyperwkb.core.scalars import div, is_exact, is_nonpositive_integer


def test_is_exact() -> None:
    assert is_exact(3)
    assert is_exact(Fraction(1, 3))
    assert not is_exact(0.5)
    assert not is_exact(1j)
    assert not is_exact(True)


def test_div_stays_exact() -> None:
    assert div(1, 3) == Fraction(1, 3)
    assert isinstance(div(1, 3), Fraction)
    assert div(1.0, 4) == 0.25


def test_nonpositive_integers() -> None:
    assert is_nonpositive_integer(0)
    assert is_nonpositive_integer(-3)
    assert not is_nonpositive_integer(Fraction(-1, 2))
    assert is_nonpositive_integer(-2.0)
    assert not is_nonpositive_integer(-2.0 + 1e-9j)
    assert is_nonpositive_integer(-2.0 + 1e-9j, tol=1e-6)
    assert not is_nonpositive_integer(1)
