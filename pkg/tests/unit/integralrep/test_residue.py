"""Tests for the residue-over-torus formulas."""

import pytest

from hyperwkb.core.errors import ParameterError
from hyperwkb.integralrep import (
    adjudicate_thm2,
    euler_gauss_integral,
    thm1_residue_formula,
    thm2_confluent_formula,
)
from hyperwkb.series import HyperParams, pfq_eval

GAUSS = HyperParams.of([0.4, 0.8], [2.5])


def _series(params: HyperParams, t: float) -> complex:
    return complex(pfq_eval(params, t).value)


class TestBalanced:
    def test_gauss_matches_series(self) -> None:
        assert abs(thm1_residue_formula(GAUSS, 0.36) - _series(GAUSS, 0.36)) < 1e-8

    @pytest.mark.parametrize("t", [0.1, 0.36, 0.6])
    def test_agrees_with_euler(self, t: float) -> None:
        params = HyperParams.of([0.7, 1.3], [1.8])
        residue = thm1_residue_formula(params, t)
        assert abs(residue - euler_gauss_integral(0.7, 1.3, 1.8, t)) < 1e-7
        assert abs(residue - _series(params, t)) < 1e-7

    def test_radius_independence(self) -> None:
        values = [thm1_residue_formula(GAUSS, 0.36, radius=r) for r in (0.8, 1.0, 1.25)]
        assert max(abs(v - values[1]) for v in values) < 1e-10

    def test_rebalance_invariance(self) -> None:
        plain = thm1_residue_formula(GAUSS, 0.36)
        moved = thm1_residue_formula(GAUSS, 0.36, rebalance=([0.2, 0.8], [2.0, 0.5]))
        assert abs(moved - plain) < 1e-10

    def test_default_rebalance_is_even_split(self) -> None:
        plain = thm1_residue_formula(GAUSS, 0.36)
        explicit = thm1_residue_formula(GAUSS, 0.36, rebalance=([0.5, 0.5], [1.0, 1.0]))
        assert explicit == plain

    def test_rebalance_powers_must_sum_to_one(self) -> None:
        with pytest.raises(ParameterError):
            thm1_residue_formula(GAUSS, 0.36, rebalance=([0.2, 0.3], [2.0, 0.5]))

    def test_zero_upper_parameter(self) -> None:
        value = thm1_residue_formula(HyperParams.of([0.4, 0], [2.5]), 0.5)
        assert value == pytest.approx(1.0, abs=1e-12)

    def test_small_beta_rejected(self) -> None:
        with pytest.raises(ParameterError):
            thm1_residue_formula(HyperParams.of([0.4, 0.8], [0.9]), 0.3)

    def test_outside_disc_rejected(self) -> None:
        with pytest.raises(ParameterError):
            thm1_residue_formula(GAUSS, 1.2)

    def test_radius_outside_annulus_rejected(self) -> None:
        with pytest.raises(ParameterError):
            thm1_residue_formula(GAUSS, 0.36, radius=3.0)

    def test_bad_rebalance_rejected(self) -> None:
        with pytest.raises(ParameterError):
            thm1_residue_formula(GAUSS, 0.36, rebalance=([0.25, 0.5], [1.0, 1.0]))

    @pytest.mark.slow
    def test_three_f_two(self) -> None:
        params = HyperParams.of([0.3, 0.5, 0.9], [2.5, 3.0])
        assert abs(thm1_residue_formula(params, 0.2) - _series(params, 0.2)) < 1e-4


class TestConfluent:
    def test_zero_f_one(self) -> None:
        params = HyperParams.of([], [2.4])
        assert abs(thm2_confluent_formula(params, 0.5) - _series(params, 0.5)) < 1e-8

    def test_kummer(self) -> None:
        params = HyperParams.of([0.3], [1.7])
        assert abs(thm2_confluent_formula(params, 2.0) - _series(params, 2.0)) < 1e-8

    def test_at_zero(self) -> None:
        assert thm2_confluent_formula(HyperParams.of([], [2.4]), 0) == pytest.approx(1.0)

    def test_printed_variants_mismatch(self) -> None:
        params = HyperParams.of([], [2.4])
        exact = _series(params, 0.5)
        assert abs(thm2_confluent_formula(params, 0.5, constant="printed") - exact) > 1e-3
        assert abs(thm2_confluent_formula(params, 0.5, exponent="printed") - exact) > 1e-3

    def test_adjudication(self) -> None:
        verdict = adjudicate_thm2()
        assert verdict.verdict == "derived"
        assert verdict.derived_error < 1e-8

    def test_balanced_rejected(self) -> None:
        with pytest.raises(ParameterError):
            thm2_confluent_formula(GAUSS, 0.3)

    @pytest.mark.slow
    def test_one_f_two(self) -> None:
        params = HyperParams.of([0.6], [2.2, 2.8])
        assert abs(thm2_confluent_formula(params, 0.7) - _series(params, 0.7)) < 1e-6
