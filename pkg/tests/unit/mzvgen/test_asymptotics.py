"""Tests for the large-λ behaviour of the generating functions."""

import cmath
from fractions import Fraction

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.mzvgen import (
    exponential_combination,
    identity_522,
    omega,
    phi2_asymptotic,
    phi2_relative_error,
    rational_nullspace,
    sector_expansion_nullspace,
    sector_formula,
    stokes_jump,
)
from hyperwkb.special import digamma


class TestIdentity522:
    def test_complex_lambda(self) -> None:
        assert identity_522(0.6 + 0.2j).diff <= 1e-10

    def test_origin(self) -> None:
        out = identity_522(0)
        assert abs(out.lhs - 1) < 1e-15
        assert abs(out.rhs - 1) < 1e-15
        assert out.exponential == 1

    @pytest.mark.parametrize("lam", [6.5, 9.25, 4.3 + 0.7j])
    def test_exponential_form(self, lam: complex) -> None:
        out = identity_522(lam)
        assert out.exponential_gap <= 1e-8
        assert abs(out.rhs - out.lhs) <= 1e-8 * abs(out.lhs)

    def test_exponential_form_near_origin(self) -> None:
        lam = 0.7
        assert abs(exponential_combination(lam) - identity_522(lam).rhs) < 1e-10


class TestOmega:
    def test_is_the_stirling_remainder(self) -> None:
        for z in (20.0, 15 + 8j, 20j):
            exact = digamma(1 + z) - cmath.log(z) - 1 / (2 * z)
            assert abs(omega(z) - exact) < 1e-12

    def test_leading_term(self) -> None:
        assert abs(omega(100.0) + 1 / 12e4) < 1e-9

    def test_bad_arguments(self) -> None:
        with pytest.raises(ParameterError):
            omega(-1.0)
        with pytest.raises(ParameterError):
            omega(5.0, terms=-1)


class TestSectorForms:
    def test_upper_sector(self) -> None:
        assert phi2_relative_error(6.3, "upper") <= 1e-2

    def test_lower_sector(self) -> None:
        lam = 6.3 * cmath.exp(1.2j * cmath.pi)
        assert phi2_relative_error(lam, "lower") <= 1e-2

    def test_error_decreases_with_lambda(self) -> None:
        near = phi2_relative_error(6.3, "upper", terms=0)
        far = phi2_relative_error(12.3, "upper", terms=0)
        assert far < near <= 1e-2

    def test_both_forms_hold_below_the_real_axis(self) -> None:
        lam = -7.0j
        upper = phi2_asymptotic(lam, "upper")
        lower = phi2_asymptotic(lam, "lower")
        assert abs(upper - lower) <= 1e-6 * abs(upper)

    def test_jump_above_the_real_axis(self) -> None:
        lam = 7.2 * cmath.exp(0.3j * cmath.pi)
        jump = sector_formula(lam, "lower") - sector_formula(lam, "upper")
        assert abs(jump - stokes_jump(lam)) <= 1e-5 * abs(stokes_jump(lam))

    def test_sector_checks(self) -> None:
        with pytest.raises(ParameterError):
            phi2_asymptotic(2.0)
        with pytest.raises(ParameterError):
            phi2_asymptotic(5.0 + 1.0j, "lower")
        with pytest.raises(ParameterError):
            phi2_asymptotic(-6.3, "upper")
        with pytest.raises(ParameterError):
            sector_formula(6.3, "middle")  # type: ignore[arg-type]


class TestSectorNullspace:
    @pytest.mark.parametrize(
        "coeffs", [(1, 1, 1), (1, 2, 3), (Fraction(1, 2), -3, Fraction(5, 7))]
    )
    def test_nonzero_coefficients_force_zero(self, coeffs: tuple[int | Fraction, ...]) -> None:
        out = sector_expansion_nullspace(*coeffs)
        assert out.rank == 3
        assert out.is_trivial

    def test_elimination_contradiction(self) -> None:
        a, b, c = Fraction(2), Fraction(-3), Fraction(5, 4)
        alpha = Fraction(1)
        beta = -b / a * alpha
        gamma_direct = -c / a * alpha
        gamma_via_beta = -c / b * beta
        assert gamma_via_beta == c / a * alpha
        assert gamma_direct != gamma_via_beta

    def test_vanishing_coefficient_opens_a_solution(self) -> None:
        out = sector_expansion_nullspace(1, 0, 1)
        assert out.rank == 2
        assert out.basis == ((Fraction(-1), Fraction(0), Fraction(1)),)

    def test_rational_nullspace(self) -> None:
        rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
        out = rational_nullspace(rows)
        assert out.rank == 1
        assert len(out.basis) == 2
        for vec in out.basis:
            assert sum(x * y for x, y in zip(rows[0], vec, strict=True)) == 0
