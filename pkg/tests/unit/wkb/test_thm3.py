"""Tests for large-|t| asymptotics of ₀F_q."""

import math

import pytest

from hyperwkb.core.errors import DominanceError, ParameterError
from hyperwkb.series import HyperParams, pfq_eval
from hyperwkb.wkb import select_branches, thm3_asymptotic_eval, thm3_constants

BESSEL = HyperParams.of([], [1])
J0_AT_20 = 0.16702466434058316


def _relative_error(params: HyperParams, t: float, terms: int) -> float:
    exact = complex(pfq_eval(params, t).value)
    approx = thm3_asymptotic_eval(params, t, terms)
    return abs(approx - exact) / abs(exact)


def test_bessel_constant() -> None:
    assert thm3_constants([1])[0] == pytest.approx(1 / (2 * math.sqrt(math.pi)))


def test_triple_constant() -> None:
    assert thm3_constants([1, 1])[0] == pytest.approx(1 / (2 * math.pi * math.sqrt(3)))


def test_constant_carries_gamma_product() -> None:
    ratio = thm3_constants([3.5])[0] / thm3_constants([1])[0]
    assert ratio == pytest.approx(math.gamma(3.5))


def test_constants_cover_every_branch() -> None:
    ks = thm3_constants([1, 1])
    assert len(ks) == 3
    assert all(abs(k) == pytest.approx(abs(ks[0])) for k in ks)


def test_bessel_leading_order() -> None:
    assert _relative_error(BESSEL, 400.0, 1) <= 0.02


def test_bessel_error_halves_when_t_quadruples() -> None:
    ratio = _relative_error(BESSEL, 1600.0, 1) / _relative_error(BESSEL, 400.0, 1)
    assert 0.4 < ratio < 0.6


def test_more_amplitude_terms_help() -> None:
    assert _relative_error(BESSEL, 400.0, 3) < _relative_error(BESSEL, 400.0, 1) / 100


def test_triple_confluent_leading_order() -> None:
    params = HyperParams.of([], [1, 1])
    assert _relative_error(params, 1000.0, 1) <= 0.02
    assert _relative_error(params, 1000.0, 2) <= 1e-3


def test_negative_axis_needs_combination() -> None:
    with pytest.raises(DominanceError):
        thm3_asymptotic_eval(BESSEL, -100.0)


def test_negative_axis_reproduces_j0() -> None:
    value = thm3_asymptotic_eval(BESSEL, -100.0, 3, combine_oscillatory=True)
    assert abs(value.imag) < 1e-10
    assert value.real == pytest.approx(J0_AT_20, abs=1e-3)
    assert complex(pfq_eval(BESSEL, -100.0).value).real == pytest.approx(J0_AT_20, abs=1e-9)


def test_rejects_upper_parameters() -> None:
    with pytest.raises(ParameterError):
        thm3_asymptotic_eval(HyperParams.of([0.5], [1]), 100.0)


class TestSelectBranches:
    def test_single_dominant(self) -> None:
        assert select_branches([40.0, -40.0]) == [0]

    def test_tie_without_combination(self) -> None:
        with pytest.raises(DominanceError):
            select_branches([1.0, 0.0, -30.0])

    def test_tie_with_combination(self) -> None:
        assert sorted(select_branches([1.0, 0.0, -30.0], combine_oscillatory=True)) == [0, 1]
