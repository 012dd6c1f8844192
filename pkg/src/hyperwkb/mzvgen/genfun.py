"""Generating functions Δ₂(λ) = Σ(−1)^k ζ(2,…,2)λ^{2k} and Δ₃(λ) = Σ(−1)^k ζ(3,…,3)λ^{3k}."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Literal, cast

import numpy as np
import scipy.special as sc

from hyperwkb.core.errors import ConvergenceError, ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.frobenius.at_one import EPSILON, zeta3_basis_at_one, zeta3_params
from hyperwkb.frobenius.connection import ConnectionData, series_target, solve_connection
from hyperwkb.opcore.logstack import LogStackSolution
from hyperwkb.series.mzv import mzv_repeated
from hyperwkb.series.pfq import pfq_series
from hyperwkb.special.gamma import EULER_GAMMA, digamma, rgamma, zeta

logger = logging.getLogger(__name__)

SERIES_RADIUS = 2.0
SERIES_TOL = 1e-17
MAX_SERIES_DEPTH = 60
PRODUCT_TERMS = 2000
MAX_POLYLOG_TERMS = 4096
CONNECTION_ORDER = 120

Delta2Route = Literal["series", "product", "closed"]
Delta3Route = Literal["series", "product", "gamma"]
U1Route = Literal["polylog", "psi"]


def delta_coefficients(degree: int, k_max: int) -> list[float]:
    """(−1)^k ζ({d}^k) for k = 0..k_max, the coefficients of Δ_d in powers of λ^d."""
    if k_max < 0:
        raise ParameterError("k_max must be nonnegative", field="k_max")
    return [(-1) ** k * mzv_repeated(degree, k) for k in range(k_max + 1)]


def _series_route(degree: int, lam: Scalar) -> complex:
    lc = complex(lam)
    if abs(lc) > SERIES_RADIUS:
        raise ParameterError(
            f"the series route needs |λ| <= {SERIES_RADIUS}, got {abs(lc):.3g}", field="lam"
        )
    x = lc**degree
    total = 1 + 0j
    power = 1 + 0j
    for k in range(1, MAX_SERIES_DEPTH + 1):
        power *= x
        term = (-1) ** k * mzv_repeated(degree, k) * power
        total += term
        if abs(term) < SERIES_TOL:
            logger.debug(f"Δ{degree}({lc}) series: {k} terms")
            return total
    raise ConvergenceError(
        f"Δ{degree}({lc}) series did not settle in {MAX_SERIES_DEPTH} terms",
        last_ratio=abs(x),
    )


def _product_route(degree: int, lam: Scalar) -> complex:
    """∏_{n≤N}(1 − λ^d/n^d)·exp(−Σ_m λ^{dm}/m·ζ(dm, N+1))."""
    x = complex(lam) ** degree
    n = np.arange(1, PRODUCT_TERMS + 1, dtype=np.float64)
    head = complex(np.prod(1.0 - x / n**degree))
    tail = 0j
    power = 1 + 0j
    for m in range(1, MAX_SERIES_DEPTH + 1):
        power *= x
        term = power / m * float(sc.zeta(degree * m, PRODUCT_TERMS + 1))
        tail += term
        if abs(term) < SERIES_TOL:
            break
    return head * cmath.exp(-tail)


def delta2(lam: Scalar, route: Delta2Route = "closed") -> complex:
    """Δ₂(λ) = ∏(1 − λ²/n²) = sin(πλ)/(πλ)."""
    if route == "series":
        return _series_route(2, lam)
    if route == "product":
        return _product_route(2, lam)
    if route == "closed":
        lc = complex(lam)
        if lc == 0:
            return 1 + 0j
        return cmath.sin(cmath.pi * lc) / (cmath.pi * lc)
    raise ParameterError(f"Unknown Δ₂ route {route!r}", field="route")


def delta3(lam: Scalar, route: Delta3Route = "gamma") -> complex:
    """Δ₃(λ) = ∏(1 − λ³/n³) = 1/(Γ(1−λ)Γ(1+ελ)Γ(1+ε̄λ)), ε = e^{iπ/3}.

    The gamma route uses the entire reciprocal Gamma, so the zeros λ = 1, 2, … come out as 0.
    """
    if route == "series":
        return _series_route(3, lam)
    if route == "product":
        return _product_route(3, lam)
    if route == "gamma":
        lc = complex(lam)
        return rgamma(1 - lc) * rgamma(1 + EPSILON * lc) * rgamma(1 + EPSILON.conjugate() * lc)
    raise ParameterError(f"Unknown Δ₃ route {route!r}", field="route")


def delta3_printed_gamma(lam: Scalar) -> complex:
    """1/(Γ(1+λ)Γ(1−ελ)Γ(1−ε̄λ)), the Gamma product with the opposite sign of λ.

    It expands as 1 + ζ(3)λ³ + …, so it equals Δ₃(−λ) rather than Δ₃(λ).
    """
    lc = complex(lam)
    return rgamma(1 + lc) * rgamma(1 - EPSILON * lc) * rgamma(1 - EPSILON.conjugate() * lc)


@dataclass(frozen=True, slots=True)
class GenFunValue:
    """Δ_d(λ) by the ζ-series next to one of the other routes."""

    lam: complex
    series_value: complex
    closed_value: complex
    route: str

    @property
    def difference(self) -> float:
        return abs(self.series_value - self.closed_value)


def genfun_value(lam: Scalar, degree: int = 2, route: str | None = None) -> GenFunValue:
    if degree == 2:
        other = route or "closed"
        value = delta2(lam, cast(Delta2Route, other))
    elif degree == 3:
        other = route or "gamma"
        value = delta3(lam, cast(Delta3Route, other))
    else:
        raise ParameterError(
            f"generating functions exist for degree 2 or 3, got {degree}", field="degree"
        )
    return GenFunValue(complex(lam), _series_route(degree, lam), value, other)


def _polylog_u1(lc: complex) -> complex:
    if not 0 < abs(lc) < 1:
        raise ParameterError(
            f"the polylog route needs 0 < |λ| < 1, got {abs(lc):.3g}", field="lam"
        )
    x = lc * lc
    acc = 0j
    power = 1 + 0j
    for k in range(1, MAX_POLYLOG_TERMS + 1):
        power *= x
        term = zeta(2 * k + 1) * power
        acc += term
        if abs(term) < SERIES_TOL:
            return 2 * _series_route(2, lc) * (cmath.log(lc) + acc)
    raise ConvergenceError(f"Σζ(2k+1)λ^{{2k}} at λ={lc} did not settle", last_ratio=abs(x))


def u1_at_one(lam: Scalar, route: U1Route = "psi") -> complex:
    """Second solution of {(1−t)𝒟² + λ²t}u = 0 at t = 1.

    "polylog" sums 2Δ₂(λ){ln λ + Σ_k ζ(2k+1)λ^{2k}}; "psi" evaluates
    Δ₂(λ){2 ln λ − 2γ − Ψ(1+λ) − Ψ(1−λ)}. Both use the principal ln λ.
    """
    lc = complex(lam)
    if lc == 0:
        raise ParameterError("u₁(1; λ) has a logarithmic singularity at λ = 0", field="lam")
    if route == "polylog":
        return _polylog_u1(lc)
    if route == "psi":
        bracket = 2 * cmath.log(lc) - 2 * EULER_GAMMA - digamma(1 + lc) - digamma(1 - lc)
        return delta2(lc) * bracket
    raise ParameterError(f"Unknown u₁ route {route!r}", field="route")


def delta3_connection(lam: Scalar, order: int = CONNECTION_ORDER) -> ConnectionData:
    """Coefficients of u₀ = F(−λ, ελ, ε̄λ; 1, 1; t) on the basis (v₁, v₂, v₃) at t = 1.

    Since v₁ and v₂ vanish at s = 0 and v₃(0) = 1, the third coefficient is u₀(1) = Δ₃(λ).
    """
    u0 = LogStackSolution.from_series(pfq_series(zeta3_params(lam), order))
    data = solve_connection(series_target(u0), zeta3_basis_at_one(lam, order))
    logger.debug(f"delta3_connection({lam}): C = {data.coefficients[2]:.12g}")
    return data
