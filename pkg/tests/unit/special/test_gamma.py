"""Tests for Gamma, Beta, digamma and zeta."""

import math

import pytest
import scipy.special as sc

from hyperwkb.core.errors import ParameterError, PoleError
from hyperwkb.special import (
    EULER_GAMMA,
    beta,
    digamma,
    digamma_reflection_residual,
    gamma,
    loggamma,
    rgamma,
    zeta,
)

POINTS = [0.3, 2.5, -1.5, 0.4 + 0.7j, -2.3 - 1.1j, 7.0 + 3.0j]


class TestGamma:
    def test_integers(self) -> None:
        assert abs(gamma(5) - 24) < 1e-12

    def test_half(self) -> None:
        assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14

    @pytest.mark.parametrize("z", POINTS)
    def test_against_scipy(self, z: complex) -> None:
        expected = complex(sc.gamma(complex(z)))
        assert abs(gamma(z) - expected) <= 1e-12 * abs(expected)

    def test_pole(self) -> None:
        with pytest.raises(PoleError) as exc:
            gamma(-2)
        assert exc.value.point == -2

    def test_reciprocal_vanishes_at_poles(self) -> None:
        assert rgamma(0) == 0
        assert rgamma(-4) == 0
        assert abs(rgamma(3) - 0.5) < 1e-15

    def test_loggamma(self) -> None:
        assert abs(loggamma(10) - math.log(362880)) < 1e-12
        with pytest.raises(PoleError):
            loggamma(0)


def test_beta() -> None:
    assert abs(beta(2, 3) - 1 / 12) < 1e-15
    assert abs(beta(0.5, 0.5) - math.pi) < 1e-13


class TestDigamma:
    def test_one(self) -> None:
        assert abs(digamma(1) + EULER_GAMMA) < 1e-14

    def test_half(self) -> None:
        assert abs(digamma(0.5) - (-EULER_GAMMA - 2 * math.log(2))) < 1e-14

    @pytest.mark.parametrize("z", POINTS)
    def test_against_scipy(self, z: complex) -> None:
        expected = complex(sc.psi(complex(z)))
        assert abs(digamma(z) - expected) <= 1e-12 * max(1.0, abs(expected))

    def test_recurrence(self) -> None:
        z = 0.2 + 0.9j
        assert abs(digamma(z + 1) - digamma(z) - 1 / z) < 1e-13

    def test_pole(self) -> None:
        with pytest.raises(PoleError):
            digamma(-1)


class TestReflection:
    @pytest.mark.parametrize("z", [0.3, 0.45 + 0.2j, -1.7 + 0.6j])
    def test_cot_vanishes(self, z: complex) -> None:
        assert abs(digamma_reflection_residual(z)) < 1e-10

    def test_arctan_reading_fails(self) -> None:
        assert abs(digamma_reflection_residual(0.3, "arctan")) > 0.05

    def test_unknown_variant(self) -> None:
        with pytest.raises(ParameterError):
            digamma_reflection_residual(0.3, "tan")  # type: ignore[arg-type]


def test_zeta() -> None:
    assert abs(zeta(2) - math.pi**2 / 6) < 1e-15
    assert abs(zeta(4) - math.pi**4 / 90) < 1e-15
    with pytest.raises(ParameterError):
        zeta(1)
