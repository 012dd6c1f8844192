"""Residue-over-torus integral formulas for balanced and confluent pFq."""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable, Sequence
from typing import Literal

import numpy as np
from pydantic import BaseModel

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.integralrep.contour import ContourSpec, torus_average
from hyperwkb.integralrep.quadrature import cube_rule, real_parameter
from hyperwkb.series.params import HyperParams
from hyperwkb.series.pfq import pfq_eval
from hyperwkb.special.gamma import gamma

logger = logging.getLogger(__name__)

CUBE_NODES = {1: 48, 2: 24}
RESIDUE_CHUNK = 32
REBALANCE_TOL = 1e-12

ConstantVariant = Literal["derived", "printed"]
ExponentVariant = Literal["derived", "printed"]

# kernel(η, a) with η of shape (chunk, 1) and one array per a_j over the torus points
ResidueKernel = Callable[[np.ndarray, list[np.ndarray]], np.ndarray]


def _torus_coordinates(bs: tuple[np.ndarray, ...], q: int) -> list[np.ndarray]:
    """a₁ = b₁^q, a_j = b_j^{q+1−j}/(b₁⋯b_{j−1}), a_{q+1} = 1/(b₁⋯b_q); ∏a_j = 1."""
    out: list[np.ndarray] = []
    prefix = np.ones_like(bs[0])
    for j in range(q):
        out.append(bs[j] ** (q - j) / prefix)
        prefix = prefix * bs[j]
    out.append(1.0 / prefix)
    return out


def _modulus_exponents(q: int) -> list[int]:
    """|a_j| = r^{q+2−2j} on the torus |b_k| = r."""
    return [q + 2 - 2 * j for j in range(1, q + 2)]


def _residue_cube_integral(
    kernel: ResidueKernel, exponents: list[float], nodes: int, spec: ContourSpec, q: int
) -> complex:
    """∫ over the q-cube with weights ∏(1−τ_i)^{e_i} of Res kernel(η(τ), a)."""
    tau, w = cube_rule(exponents, nodes)
    eta = np.prod(tau, axis=1) ** (1.0 / (q + 1))

    def chunk_average(col: np.ndarray) -> np.ndarray:
        return torus_average(lambda bs: kernel(col, _torus_coordinates(bs, q)), spec, dim=q)

    total = 0j
    for start in range(0, len(w), RESIDUE_CHUNK):
        stop = start + RESIDUE_CHUNK
        total += complex(chunk_average(eta[start:stop, None]) @ w[start:stop])
    return total


def _lower_exponents(params: HyperParams) -> list[float]:
    betas = [real_parameter(b, "lower") for b in params.lower]
    for j, b in enumerate(betas):
        if b <= 1:
            raise ParameterError(
                f"β[{j}] = {b}: the cube integral needs Re β > 1", field="lower", index=j
            )
    return betas


def _rebalanced_scales(
    q: int, t: complex, rebalance: tuple[Sequence[float], Sequence[Scalar]] | None
) -> list[complex]:
    """ν_j·t^{μ_j}, by default t^{1/(q+1)} for every j."""
    mus, nus = rebalance or ([1.0 / (q + 1)] * (q + 1), [1.0] * (q + 1))
    if len(mus) != q + 1 or len(nus) != q + 1:
        raise ParameterError(f"rebalance needs {q + 1} pairs (μ_j, ν_j)", field="rebalance")
    if any(mu < 0 for mu in mus) or abs(sum(mus) - 1.0) > REBALANCE_TOL:
        raise ParameterError("need μ_j ≥ 0 with Σμ_j = 1", field="rebalance")
    if abs(math.prod(complex(nu) for nu in nus) - 1) > REBALANCE_TOL:
        raise ParameterError("need ∏ν_j = 1", field="rebalance")
    log_t = cmath.log(t)
    return [complex(nu) * cmath.exp(mu * log_t) for mu, nu in zip(mus, nus, strict=True)]


def _check_annulus(scales: Sequence[float], radius: float, q: int) -> None:
    for j, (s, e) in enumerate(zip(scales, _modulus_exponents(q), strict=True)):
        if s * radius**e >= 1:
            raise ParameterError(
                f"|b| = {radius} leaves the annulus of convergence of factor {j + 1}",
                field="radius",
            )


def thm1_residue_formula(
    params: HyperParams,
    t: Scalar,
    *,
    rebalance: tuple[Sequence[float], Sequence[Scalar]] | None = None,
    radius: float | None = None,
) -> complex:
    """q+1Fq(α; β; t) = ∏(β_i−1)∫d^qτ ∏(1−τ_i)^{β_i−2} Res ∏(1 − a_j·η·t^{1/(q+1)})^{−α_j}.

    η = (τ₁⋯τ_q)^{1/(q+1)} and the residue runs over the torus ∏a_j = 1 in b-coordinates.
    With `rebalance=(μ, ν)` the factor t^{1/(q+1)} of a_j becomes ν_j·t^{μ_j}.
    """
    q = params.q
    if q not in CUBE_NODES or params.p != q + 1:
        raise ParameterError(f"{params} is not a balanced 2F1 or 3F2", field="upper")
    betas = _lower_exponents(params)
    tc = complex(t)
    if tc == 0:
        return 1 + 0j
    if abs(tc) >= 1:
        raise ParameterError(f"|t| = {abs(tc)} must be below 1", field="t")
    scales = _rebalanced_scales(q, tc, rebalance)
    moduli = [abs(s) for s in scales]
    if radius is None:
        radius = math.sqrt(moduli[1] / moduli[0]) if q == 1 else 1.0
    _check_annulus(moduli, radius, q)
    alphas = [complex(a) for a in params.upper]

    def kernel(eta: np.ndarray, a: list[np.ndarray]) -> np.ndarray:
        out = np.ones(np.broadcast(eta, a[0]).shape, dtype=complex)
        for alpha, s, aj in zip(alphas, scales, a, strict=True):
            out *= (1.0 - aj * eta * s) ** (-alpha)
        return out

    spec = ContourSpec(radius=radius)
    value = _residue_cube_integral(kernel, [b - 2 for b in betas], CUBE_NODES[q], spec, q)
    value *= math.prod(b - 1 for b in betas)
    logger.debug(f"thm1_residue_formula {params} at t={t}: {value:.12g}")
    return value


def thm2_confluent_formula(
    params: HyperParams,
    t: Scalar,
    *,
    constant: ConstantVariant = "derived",
    exponent: ExponentVariant = "derived",
    radius: float | None = None,
) -> complex:
    """pFq(α; β; t), p < q+1, as C∫d^qτ ∏(1−τ_i)^e Res ∏_{j≤p}(1−a_jη)^{−α_j}e^{ηt^κΣ_{j>p}a_j}.

    κ = 1/(q+1−p). The derived constant is C = ∏(β_i−1) with e = β_i−2; the printed
    variants are C = ∏Γ(β_i−1) and e = β_i−1.
    """
    q, p = params.q, params.p
    if q not in CUBE_NODES or p not in (0, 1):
        raise ParameterError(f"{params} needs q ∈ {{1, 2}} and p ∈ {{0, 1}}", field="upper")
    betas = _lower_exponents(params)
    tc = complex(t)
    kappa = 1.0 / (q + 1 - p)
    t_kappa = 0j if tc == 0 else cmath.exp(kappa * cmath.log(tc))
    if radius is None:
        radius = 1.0 if p == 0 else 0.5
    if p == 1 and radius**q >= 1:
        raise ParameterError(f"|b| = {radius} leaves the disc |a₁| < 1", field="radius")
    alphas = [complex(a) for a in params.upper]

    def kernel(eta: np.ndarray, a: list[np.ndarray]) -> np.ndarray:
        out = np.exp(eta * t_kappa * sum(a[p:], np.zeros_like(a[0])))
        for alpha, aj in zip(alphas, a, strict=False):
            out = out * (1.0 - aj * eta) ** (-alpha)
        return np.asarray(out)

    shift = 2 if exponent == "derived" else 1
    spec = ContourSpec(radius=radius)
    value = _residue_cube_integral(kernel, [b - shift for b in betas], CUBE_NODES[q], spec, q)
    if constant == "derived":
        value *= math.prod(b - 1 for b in betas)
    else:
        value *= math.prod(complex(gamma(b - 1)) for b in betas)
    logger.debug(f"thm2_confluent_formula {params} at t={t} ({constant}/{exponent}): {value:.12g}")
    return value


class Thm2Verdict(BaseModel, frozen=True):
    """Relative errors of the confluent formula variants against the series at one point."""

    params: str
    t: float
    derived_error: float
    printed_constant_error: float
    printed_exponent_error: float

    @property
    def verdict(self) -> Literal["derived", "printed", "inconclusive"]:
        printed = min(self.printed_constant_error, self.printed_exponent_error)
        if self.derived_error < 1e-8 < printed:
            return "derived"
        if self.derived_error > 1e-8 > self.printed_constant_error:
            return "printed"
        return "inconclusive"


def adjudicate_thm2(params: HyperParams | None = None, t: float = 0.5) -> Thm2Verdict:
    """Compare the derived and printed constant/exponent of the confluent formula with pFq."""
    params = params or HyperParams.of([], [2.4])
    exact = complex(pfq_eval(params, t).value)

    def rel(value: complex) -> float:
        return abs(value - exact) / abs(exact)

    verdict = Thm2Verdict(
        params=str(params),
        t=t,
        derived_error=rel(thm2_confluent_formula(params, t)),
        printed_constant_error=rel(thm2_confluent_formula(params, t, constant="printed")),
        printed_exponent_error=rel(thm2_confluent_formula(params, t, exponent="printed")),
    )
    logger.info(f"adjudicate_thm2 {params}: {verdict.verdict}")
    return verdict
