"""Tests for large-parameter WKB branches, actions and amplitudes."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.special import beta as beta_fn
from scipy.special import betainc

from hyperwkb.core.errors import BranchCollisionError, DominanceError, ParameterError
from hyperwkb.series import HyperParams, pfq_eval
from hyperwkb.special import restricted_quadform_det
from hyperwkb.wkb import (
    hj_actions,
    large_param_branches,
    thm4_eval,
    transport_amplitude,
)

EPS = cmath.exp(1j * math.pi / 3)
DELTA2_NUS = [1, -1]
CUBIC_NUS = [-1, EPS, EPS.conjugate()]
CUBIC_SIGMAS = [EPS, -1, EPS.conjugate()]


def _cubic_action(t: float) -> float:
    return float(beta_fn(1 / 3, 2 / 3) * betainc(1 / 3, 2 / 3, t))


def _delta2_exact(a: int) -> float:
    value = pfq_eval(HyperParams.of([a, -a], [1]), Fraction(1, 2)).value
    assert isinstance(value, Fraction)
    return float(value)


class TestBranches:
    def test_delta2_roots_and_action(self) -> None:
        data = large_param_branches(DELTA2_NUS, 0.5)
        assert data.rho[0] == pytest.approx(1j)
        assert data.rho[1] == pytest.approx(-1j)
        assert data.phi[0] == pytest.approx(2j * math.asin(math.sqrt(0.5)))
        assert data.phi[1] == pytest.approx(-2j * math.asin(math.sqrt(0.5)))
        assert data.det == pytest.approx(2 * data.rho)

    def test_cubic_roots_follow_closed_form(self) -> None:
        t = 0.5
        data = large_param_branches(CUBIC_NUS, t, [1, 1])
        r = (t / (1 - t)) ** (1 / 3)
        for k, sigma in enumerate(CUBIC_SIGMAS):
            assert data.rho[k] == pytest.approx(sigma * r)
            assert data.phi[k] == pytest.approx(sigma * _cubic_action(t))
            assert data.det[k] == pytest.approx(3 * data.rho[k] ** 2)

    def test_residual_is_small(self) -> None:
        data = large_param_branches([0.7, 1.3 + 0.2j, -0.4 + 0.9j], 0.3)
        assert data.residual() < 1e-10

    def test_determinant_is_restricted_form(self) -> None:
        nus = [0.7, 1.3 + 0.2j, -0.4 + 0.9j]
        data = large_param_branches(nus, 0.3)
        for rho, det in zip(data.rho, data.det, strict=True):
            lams = [rho * (1 + rho / nu) for nu in nus]
            assert complex(det) == pytest.approx(complex(restricted_quadform_det(lams)), rel=1e-10)

    def test_boundary_factor_equals_root(self) -> None:
        data = large_param_branches([0.7, 1.3 + 0.2j, -0.4 + 0.9j], 0.3)
        np.testing.assert_allclose(data.xi, data.rho, rtol=1e-10)

    def test_gamma_constant(self) -> None:
        data = large_param_branches(CUBIC_NUS, 0.5, [2, 3])
        assert data.e_const == pytest.approx(2 / (2 * math.pi))

    def test_zero_nu_rejected(self) -> None:
        with pytest.raises(ParameterError):
            large_param_branches([0, 1], 0.5)

    def test_root_at_infinity_reported(self) -> None:
        with pytest.raises(BranchCollisionError):
            large_param_branches(DELTA2_NUS, 1.0)


class TestActions:
    def test_zero_time_gives_zero_action(self) -> None:
        r, s = hj_actions(DELTA2_NUS, [0.0])
        assert np.all(r == 0)
        assert np.all(s == 0)

    def test_cubic_action_quadrature(self) -> None:
        path = [0.1, 0.5, 0.8]
        _, s = hj_actions(CUBIC_NUS, path)
        for i, t in enumerate(path):
            for k, sigma in enumerate(CUBIC_SIGMAS):
                assert s[i, k] == pytest.approx(sigma * _cubic_action(t), rel=1e-9)

    def test_action_agrees_with_closed_phase(self) -> None:
        _, s = hj_actions(CUBIC_NUS, [0.5])
        data = large_param_branches(CUBIC_NUS, 0.5)
        np.testing.assert_allclose(s[0], data.phi, rtol=1e-9)

    def test_small_time_behaviour(self) -> None:
        t = 1e-6
        r, s = hj_actions(DELTA2_NUS, [t])
        assert s[0, 0] == pytest.approx(2j * math.sqrt(t), rel=1e-6)
        assert r[0, 0] == pytest.approx(1j * math.sqrt(t / (1 - t)), rel=1e-10)


class TestTransport:
    @pytest.mark.parametrize("t", [0.2, 0.5, 0.8])
    def test_delta2_amplitude(self, t: float) -> None:
        for branch in (0, 1):
            psi = transport_amplitude(DELTA2_NUS, [1], branch, [t])[0]
            assert psi == pytest.approx(((1 - t) / t) ** 0.25, rel=1e-9)

    def test_cubic_amplitude(self) -> None:
        path = [0.25, 0.5]
        psi = transport_amplitude(CUBIC_NUS, [1, 1], 0, path)
        for value, t in zip(psi, path, strict=True):
            assert value == pytest.approx(((1 - t) / t) ** (1 / 3), rel=1e-9)

    def test_branch_out_of_range(self) -> None:
        with pytest.raises(ParameterError):
            transport_amplitude(DELTA2_NUS, [1], 2, [0.5])


class TestThm4:
    def test_exact_polynomial_value(self) -> None:
        assert _delta2_exact(8) == 35 / 256

    def test_delta2_against_polynomial(self) -> None:
        errors = []
        for a in (8, 16):
            approx = thm4_eval(DELTA2_NUS, [1], a, 0.5, combine_oscillatory=True)
            exact = _delta2_exact(a)
            assert abs(approx.imag) < 1e-10
            errors.append(abs(approx.real - exact) / abs(exact))
        assert errors[0] <= 0.05
        assert 0.3 <= errors[1] / errors[0] <= 0.7

    def test_delta2_closed_form(self) -> None:
        a, t = 8, 0.5
        theta = math.asin(math.sqrt(t))
        expected = math.cos(2 * a * theta - math.pi / 4) / math.sqrt(math.pi * a * math.tan(theta))
        value = thm4_eval(DELTA2_NUS, [1], a, t, combine_oscillatory=True)
        assert value == pytest.approx(expected, rel=1e-10)

    def test_delta2_pair_has_no_dominant_branch(self) -> None:
        with pytest.raises(DominanceError):
            thm4_eval(DELTA2_NUS, [1], 8, 0.5)

    def test_cubic_closed_form(self) -> None:
        a, t = 10.0, 0.5
        s0 = _cubic_action(t)
        eb = EPS.conjugate()
        expected = (
            ((1 - t) / t) ** (1 / 3)
            / (2 * math.pi * math.sqrt(3) * a)
            * (eb * cmath.exp(EPS * a * s0) + EPS * cmath.exp(eb * a * s0))
        )
        value = thm4_eval(CUBIC_NUS, [1, 1], a, t, combine_oscillatory=True)
        assert value == pytest.approx(expected, rel=1e-9)

    def test_rejects_nonpositive_parameter(self) -> None:
        with pytest.raises(ParameterError):
            thm4_eval(DELTA2_NUS, [1], 0.0, 0.5)

    def test_rejects_wrong_lower_count(self) -> None:
        with pytest.raises(ParameterError):
            thm4_eval(DELTA2_NUS, [1, 1], 8, 0.5)
