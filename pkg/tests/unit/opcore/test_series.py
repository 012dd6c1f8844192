"""Tests for GradedSeries."""

import cmath
from fractions import Fraction
from math import factorial

import pytest

from hyperwkb.core.errors import LatticeError, ParameterError
from hyperwkb.opcore import GradedSeries, lattice_offset

EXP = GradedSeries.from_coefficients([Fraction(1, factorial(n)) for n in range(16)])


class TestConstruction:
    def test_normalization_moves_the_leading_exponent(self) -> None:
        s = GradedSeries.from_coefficients([0, 0, 1, 2])
        assert s.leading_exponent == 2
        assert s.coefficients == (1, 2)
        assert s.cutoff == 4

    def test_zero_stays_zero(self) -> None:
        s = GradedSeries.from_coefficients([0, 0])
        assert s.is_zero()
        assert s.truncation_order == 1

    def test_invalid(self) -> None:
        with pytest.raises(ParameterError):
            GradedSeries("t", 0, 0, (1,))
        with pytest.raises(ParameterError):
            GradedSeries("t", 1, 0, ())

    def test_monomial(self) -> None:
        m = GradedSeries.monomial(Fraction(1, 2), 2, coefficient=3, lattice=2)
        assert m.coefficients == (3, 0, 0)
        assert m.exponent(2) == Fraction(3, 2)


class TestLattice:
    def test_offset(self) -> None:
        assert lattice_offset(0, Fraction(3, 2), 2) == 3
        assert lattice_offset(0.5, 2.5, 1) == 2
        with pytest.raises(LatticeError):
            lattice_offset(0, Fraction(1, 3), 2)

    def test_regrid(self) -> None:
        s = GradedSeries("t", 1, 0, (1, 2)).regrid(2)
        assert s.coefficients == (1, 0, 2, 0)
        assert s.cutoff == 2
        with pytest.raises(LatticeError):
            GradedSeries("t", 2, 0, (1,)).regrid(3)


class TestArithmetic:
    def test_add_with_offset(self) -> None:
        a = GradedSeries("t", 1, 0, (1, 1, 1))
        b = GradedSeries("t", 1, 1, (1, 1))
        assert (a + b).coefficients == (1, 2, 2)

    def test_add_keeps_the_smaller_cutoff(self) -> None:
        a = GradedSeries("t", 1, 0, (1, 1, 1, 1))
        b = GradedSeries("t", 1, 0, (1, 1))
        assert (a + b).coefficients == (2, 2)

    def test_variable_mismatch(self) -> None:
        with pytest.raises(LatticeError):
            GradedSeries("t", 1, 0, (1,)) + GradedSeries("s", 1, 0, (1,))

    def test_product(self) -> None:
        a = GradedSeries("t", 1, 0, (1, 1, 0))
        prod = a * a
        assert prod.coefficients == (1, 2, 1)
        assert (a * 2).coefficients == (2, 2, 0)

    def test_exponential_squared(self) -> None:
        sq = EXP * EXP
        assert sq.coefficients[5] == Fraction(2**5, factorial(5))

    def test_derivative(self) -> None:
        d = EXP.derivative()
        assert d.leading_exponent == -1
        assert d.normalized().coefficients[:3] == (1, 1, Fraction(1, 2))

    def test_half_power(self) -> None:
        root = GradedSeries("t", 1, 0, (1, 1, 0, 0)).power(Fraction(1, 2))
        assert root.coefficients == (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))

    def test_power_of_leading_monomial(self) -> None:
        s = GradedSeries("t", 1, 2, (4, 0)).power(Fraction(1, 2))
        assert s.leading_exponent == 1
        assert abs(complex(s.coefficients[0]) - 2) < 1e-15

    def test_scale_variable(self) -> None:
        s = EXP.scale_variable(2)
        assert s.coefficients[3] == Fraction(8, 6)


class TestEvaluate:
    def test_exponential(self) -> None:
        assert abs(EXP.evaluate(0.3) - cmath.exp(0.3)) < 1e-14

    def test_half_lattice(self) -> None:
        s = GradedSeries("t", 2, Fraction(1, 2), (1,))
        assert abs(s.evaluate(4) - 2) < 1e-14

    def test_origin(self) -> None:
        assert EXP.evaluate(0) == 1
        assert GradedSeries("t", 1, 1, (1,)).evaluate(0) == 0
        with pytest.raises(ParameterError):
            GradedSeries("t", 1, -1, (1,)).evaluate(0)

    def test_max_abs_diff(self) -> None:
        a = GradedSeries("t", 1, 0, (1, 2))
        b = GradedSeries("t", 1, 0, (1, 2.5))
        assert a.max_abs_diff(b) == 0.5
