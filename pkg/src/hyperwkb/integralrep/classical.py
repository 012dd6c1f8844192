"""Classical integral representations: Euler, Kummer, Bessel, Airy and the V-kernels."""

from __future__ import annotations

import cmath
import math
from typing import Literal

import numpy as np

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.integralrep.contour import ContourSpec, contour_residue, torus_average
from hyperwkb.integralrep.quadrature import (
    QUAD_TOL,
    jacobi_integral,
    jacobi_rule,
    real_parameter,
    settle_by_doubling,
)
from hyperwkb.series.params import HyperParams
from hyperwkb.series.pfq import pfq_eval
from hyperwkb.special.gamma import gamma, rgamma

V_NODES = 32

BesselVariant = Literal["derived", "printed"]


def _euler_prefactor(alpha: float, beta: float) -> complex:
    return gamma(beta) * rgamma(alpha) * rgamma(beta - alpha)


def _check_step_domain(params: HyperParams) -> list[tuple[float, float]]:
    """(α_{k+1}, β_k) for each integration level, outermost first."""
    if params.p != params.q + 1:
        raise ParameterError(f"{params} is not a balanced q+1Fq series", field="upper")
    levels: list[tuple[float, float]] = []
    for k in range(params.q, 0, -1):
        a = real_parameter(params.upper[k], "upper")
        b = real_parameter(params.lower[k - 1], "lower")
        if a <= 0 or b - a <= 0:
            raise ParameterError(
                f"Euler integral needs α > 0 and β − α > 0, got α = {a}, β = {b}",
                field="upper",
                index=k,
            )
        levels.append((a, b))
    return levels


def _euler_step(
    alpha0: complex, levels: list[tuple[float, float]], z: np.ndarray, nodes: int
) -> np.ndarray:
    if not levels:
        return np.asarray((1.0 - z) ** (-alpha0))
    (a, b), rest = levels[0], levels[1:]
    tau, w = jacobi_rule(nodes, b - a - 1.0, a - 1.0)
    inner = _euler_step(alpha0, rest, np.multiply.outer(z, tau), nodes)
    return np.asarray(_euler_prefactor(a, b) * (inner @ w))


def euler_step_integral(params: HyperParams, t: Scalar, tol: float = QUAD_TOL) -> complex:
    """F(α₁..α_{q+1}; β₁..β_q; t) by nesting the Euler integral over τ with F̃(τt).

    The innermost level is the binomial series (1 − z)^{−α₁}.
    """
    tc = complex(t)
    if tc.imag == 0 and tc.real >= 1:
        raise ParameterError(f"t = {t} lies on the cut [1, ∞)", field="t")
    levels = _check_step_domain(params)
    z = np.array(tc, dtype=complex)
    alpha0 = complex(params.upper[0])
    return settle_by_doubling(
        lambda n: complex(_euler_step(alpha0, levels, z, n)), tol, f"Euler integral for {params}"
    )


def euler_gauss_integral(alpha1: Scalar, alpha2: Scalar, beta: Scalar, t: Scalar) -> complex:
    return euler_step_integral(HyperParams.of([alpha1, alpha2], [beta]), t)


def kummer_integral(alpha: Scalar, beta: Scalar, t: Scalar) -> complex:
    """Γ(β)/(Γ(α)Γ(β−α))·∫₀¹ e^{tτ}τ^{α−1}(1−τ)^{β−α−1} dτ."""
    a = real_parameter(alpha, "alpha")
    b = real_parameter(beta, "beta")
    if a <= 0 or b - a <= 0:
        raise ParameterError(f"need α > 0 and β − α > 0, got α = {a}, β = {b}", field="alpha")
    tc = complex(t)
    integral = jacobi_integral(lambda tau: np.exp(tc * tau), b - a - 1.0, a - 1.0)
    return _euler_prefactor(a, b) * integral


def bessel_j0_residue(t: Scalar, spec: ContourSpec | None = None) -> complex:
    """J₀(t) = Res_{b=0} e^{(t/2)(b − 1/b)} d ln b."""
    tc = complex(t)
    return contour_residue(lambda b: np.exp(0.5 * tc * (b - 1.0 / b)) / b, spec)


def bessel_j_integral(nu: Scalar, z: Scalar, variant: BesselVariant = "derived") -> complex:
    """(z/2)^ν/Γ(ν)·∫₀¹(1−τ)^w Res e^{(z/2)√τ(b − 1/b)} d ln b dτ.

    The weight exponent w is ν − 1 ("derived", which reproduces J_ν) or ν ("printed").
    """
    v = real_parameter(nu, "nu")
    if v <= 0:
        raise ParameterError(f"ν = {v} must be positive", field="nu")
    zc = complex(z)
    exponent = v - 1.0 if variant == "derived" else v
    tau, w = jacobi_rule(V_NODES, exponent, 0.0)
    root = np.sqrt(tau)[:, None]

    def kernel(bs: tuple[np.ndarray, ...]) -> np.ndarray:
        b = bs[0]
        return np.asarray(np.exp(0.5 * zc * root * (b - 1.0 / b)))

    residues = torus_average(kernel)
    return cmath.exp(v * cmath.log(zc / 2)) * rgamma(v) * complex(residues @ w)


def airy_ai_series(t: Scalar) -> complex:
    """Ai(t) = 3^{−1/6}Γ(1/3)/(2π)·u₁(t) − 3^{1/6}Γ(2/3)/(2π)·u₂(t).

    u₁ = F(∅; 2/3; t³/9) and u₂ = t·F(∅; 4/3; t³/9) solve (𝒟² − 𝒟 − t³)u = 0.
    """
    tc = complex(t)
    x = tc**3 / 9
    u1 = complex(pfq_eval(HyperParams.of([], [2 / 3]), x).value)
    u2 = tc * complex(pfq_eval(HyperParams.of([], [4 / 3]), x).value)
    c1 = 3 ** (-1 / 6) * gamma(1 / 3) / (2 * math.pi)
    c2 = 3 ** (1 / 6) * gamma(2 / 3) / (2 * math.pi)
    return c1 * u1 - c2 * u2


def _check_v_argument(z: float) -> None:
    if z <= 0:
        raise ParameterError(f"z = {z} must be positive", field="z")


def v_series(z: float) -> tuple[complex, complex]:
    """(V₁, V₂) = (√z·F(∅; 3/2, 1/2; z/8), z·F(∅; 2, 3/2; z/8))."""
    _check_v_argument(z)
    v1 = math.sqrt(z) * complex(pfq_eval(HyperParams.of([], [1.5, 0.5]), z / 8).value)
    v2 = z * complex(pfq_eval(HyperParams.of([], [2, 1.5]), z / 8).value)
    return v1, v2


def v_integral_reps(z: float) -> tuple[complex, complex]:
    """(V₁, V₂) from their residue representations, c = z^{1/3}.

    V₁ = √z + (√z/2)∫₀¹(1−τ)^{−1/2} Res sinh(cb)e^{cτ/2b²} db/b⁴ and
    V₂ = 2c·Res cosh(cb)e^{c/2b²} db/b³.
    """
    _check_v_argument(z)
    c = z ** (1 / 3)
    v2 = 2 * c * contour_residue(lambda b: np.cosh(c * b) * np.exp(c / (2 * b**2)) / b**3)
    tau, w = jacobi_rule(V_NODES, -0.5, 0.0)
    col = tau[:, None]

    def kernel(bs: tuple[np.ndarray, ...]) -> np.ndarray:
        b = bs[0]
        return np.asarray(np.sinh(c * b) * np.exp(c * col / (2 * b**2)) / b**3)

    v1 = math.sqrt(z) * (1 + 0.5 * complex(torus_average(kernel) @ w))
    return v1, v2
