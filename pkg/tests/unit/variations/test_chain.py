"""Tests for chains of variations."""

from fractions import Fraction

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.opcore import EulerPolynomial
from hyperwkb.series import HyperParams
from hyperwkb.variations import (
    PerturbedOperator,
    airy_perturbation,
    compare_variation_formula,
    binomial_closed_form,
    binomial_operator,
    perturbed_residual,
    variation_formula,
    variation_recurrence,
)

HALF = Fraction(1, 2)


class TestBinomial:
    def test_matches_closed_form(self) -> None:
        chain = variation_recurrence(binomial_operator(0.5, 1.5), 1, 90)
        for t in (0.1, 0.3, 0.5):
            assert abs(chain[1].evaluate(t) - binomial_closed_form(0.5, 1.5, t)) < 1e-10

    def test_base_is_binomial(self) -> None:
        chain = variation_recurrence(binomial_operator(0.5, 1.5), 0, 60)
        assert abs(chain[0].evaluate(0.3) - 0.7**-0.5) < 1e-12

    def test_leading_terms_exact(self) -> None:
        chain = variation_recurrence(binomial_operator(HALF, Fraction(3, 2)), 1, 6)
        assert chain[1].leading_exponent == 2
        assert chain[1].coefficients[0] == Fraction(3, 4)

    def test_printed_closed_form_differs(self) -> None:
        derived = binomial_closed_form(0.5, 1.5, 0.3)
        assert abs(binomial_closed_form(0.5, 1.5, 0.3, "printed") - derived) > 1e-2

    def test_printed_closed_form_has_linear_term(self) -> None:
        # (γ − 1)t + O(t²) instead of O(t²)
        t = 1e-6
        assert abs(binomial_closed_form(0.5, 1.5, t, "printed")) > 0.4 * t
        assert abs(binomial_closed_form(0.5, 1.5, t)) < 10 * t**2


def test_zero_perturbation_vanishes() -> None:
    params = HyperParams.of([HALF], [])
    zero = PerturbedOperator.hypergeometric(params, EulerPolynomial.constant(0))
    chain = variation_recurrence(zero, 3, 8)
    assert all(u.is_zero() for u in chain[1:])


class TestResidual:
    def test_exact_chain(self) -> None:
        pert = binomial_operator(HALF, Fraction(3, 2))
        chain = variation_recurrence(pert, 2, 10)
        residual = perturbed_residual(pert, chain, 10)
        assert residual.max_abs(2) == 0.0
        assert residual.leading_power() == 3

    def test_airy_chain(self) -> None:
        pert = airy_perturbation()
        chain = variation_recurrence(pert, 2, 16)
        residual = perturbed_residual(pert, chain, 16)
        assert residual.max_abs(2) == 0.0
        assert residual.leading_power() == 3


class TestClosedMultiSum:
    def test_zeroth_variation_is_base_series(self) -> None:
        pert = binomial_operator(HALF, Fraction(3, 2))
        formula = variation_formula(pert, 0, 8)
        assert formula == variation_recurrence(pert, 0, 8)[0]

    @pytest.mark.parametrize("k", [1, 2])
    def test_binomial(self, k: int) -> None:
        verdict = compare_variation_formula(binomial_operator(HALF, Fraction(3, 2)), k, 12)
        assert verdict.agrees

    def test_gauss_with_euler_derivative(self) -> None:
        params = HyperParams.of([Fraction(1, 3), Fraction(2, 5)], [Fraction(7, 4)])
        pert = PerturbedOperator.hypergeometric(params, EulerPolynomial.identity())
        assert compare_variation_formula(pert, 1, 8).first_mismatch is None

    def test_needs_hypergeometric_shape(self) -> None:
        with pytest.raises(ParameterError):
            variation_formula(airy_perturbation(), 1, 8)
