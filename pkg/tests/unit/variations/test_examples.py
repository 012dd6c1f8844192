"""Tests for the worked perturbations."""

from fractions import Fraction
from math import factorial

from hyperwkb.variations import (
    Perturbation,
    PerturbedOperator,
    airy_decomposition_check,
    airy_first_variation,
    bessel_perturbation,
    bessel_variation_u01,
    first_mismatch,
    perturbed_residual,
    v2_double_sum,
    v2_perturbation,
    v2_variation,
    variation_recurrence,
)


class TestBessel:
    def test_base_series(self) -> None:
        chain = variation_recurrence(bessel_perturbation(), 0, 6)
        assert chain[0].coefficients == tuple(
            Fraction((-1) ** n, factorial(n) ** 3) for n in range(7)
        )

    def test_corrected_double_sum_matches_recurrence(self) -> None:
        chain = variation_recurrence(bessel_perturbation(), 1, 9)
        assert first_mismatch(bessel_variation_u01(9), chain[1]) is None

    def test_second_coefficient(self) -> None:
        u01 = bessel_variation_u01(4)
        assert u01.leading_exponent == 2
        assert u01.coefficients[0] == Fraction(-1, 8)
        assert u01.coefficients[1] == Fraction(1, 24)

    def test_printed_double_sum_departs(self) -> None:
        chain = variation_recurrence(bessel_perturbation(), 1, 6)
        assert first_mismatch(bessel_variation_u01(6, "printed"), chain[1]) == 1

    def test_order_zero(self) -> None:
        assert bessel_variation_u01(0).is_zero()


class TestV2:
    def test_routes_agree(self) -> None:
        out = v2_variation(6)
        assert out.mismatch is None
        assert out.agreement == 10

    def test_leading_terms(self) -> None:
        s = v2_double_sum(4)
        assert s.leading_exponent == Fraction(3, 2)
        assert s.coefficients[0] == 1
        assert s.coefficients[2] == Fraction(3, 40)
        assert s.coefficients[4] == Fraction(13, 14400)

    def test_unperturbed_is_zero(self) -> None:
        pert = v2_perturbation()
        muted = tuple(Perturbation(p.power, p.offset, p.poly * 0) for p in pert.perturbations)
        silent = PerturbedOperator(pert.base, muted, pert.root)
        chain = variation_recurrence(silent, 2, 5)
        assert chain[1].is_zero()
        assert chain[2].is_zero()

    def test_second_variation_residual(self) -> None:
        pert = v2_perturbation()
        chain = variation_recurrence(pert, 2, 6)
        residual = perturbed_residual(pert, chain, 6)
        assert residual.max_abs(2) == 0.0


class TestAiry:
    def test_first_variation_coefficients(self) -> None:
        u = airy_first_variation(13)
        assert u.leading_exponent == 4
        assert u.coefficients[0] == Fraction(1, 12)
        assert u.coefficients[3] == Fraction(1, 168)
        assert u.coefficients[6] == Fraction(29, 226800)
        assert u.coefficients[9] == Fraction(31, 23587200)

    def test_decomposition(self) -> None:
        check = airy_decomposition_check(16)
        assert check.derived_mismatch is None
        assert check.printed_sum_mismatch == 2
        assert check.decomposition_mismatch == -1
