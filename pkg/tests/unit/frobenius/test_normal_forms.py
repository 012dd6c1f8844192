"""Tests for the Wasow transform and the Langer normalization."""

from fractions import Fraction

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.frobenius import BivariateSeries, langer_normalize, langer_residual, wasow_transform


class TestBivariateSeries:
    def test_product_truncates(self) -> None:
        x = BivariateSeries(((0, 1), (1, 0)))  # t + μ
        sq = x * x
        assert sq.coefficients == ((0, 0), (0, 2))

    def test_derivative(self) -> None:
        x = BivariateSeries(((1, 2, 3),))
        assert x.derivative_t().coefficients == ((2, 6, 0),)
        assert x.lowest_mu_degree() == 0
        assert BivariateSeries.zero(1, 1).lowest_mu_degree() is None


class TestWasow:
    def test_unperturbed_is_identity(self) -> None:
        q = wasow_transform({}, 8, 4)
        assert q.entry(1, 2).max_abs() == 0
        assert q.entry(2, 1).max_abs() == 0
        assert q.entry(1, 1).coefficient(0, 0) == 1

    def test_unit_determinant(self) -> None:
        q = wasow_transform({(2, 0): 1}, 12, 6)
        det = q.determinant()
        assert det.is_exact()
        for a in range(7):
            for b in range(5):
                assert det.coefficient(a, b) == (1 if (a, b) == (0, 0) else 0)

    def test_mod3_grading(self) -> None:
        q = wasow_transform({(2, 0): 1, (0, 1): Fraction(1, 2)}, 12, 8)
        assert q.grading_violations() == []

    def test_epsilon_powers_are_integral(self) -> None:
        q = wasow_transform({(2, 0): 1}, 10, 6)
        for powers in q.epsilon_powers().values():
            assert all(p.denominator == 1 for p in powers)


class TestLanger:
    def test_airy_is_fixed(self) -> None:
        z, b = langer_normalize([1], 6)
        assert z.leading_exponent == 1
        assert z.coefficients == (1,) + (0,) * 6
        assert b.coefficients[0] == 1
        assert langer_residual([1], z) == 0

    def test_linear_phi(self) -> None:
        z, _ = langer_normalize([1, 1], 8)
        assert z.coefficients[:2] == (1, Fraction(1, 5))
        assert langer_residual([1, 1], z) < 1e-12

    def test_requires_unit_phi(self) -> None:
        with pytest.raises(ParameterError):
            langer_normalize([2, 1], 4)
