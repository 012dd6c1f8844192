"""The second-order λ-equation satisfied by Φ₁ = Δ₂(λ) and Φ₂ = u₁(1; λ).

Any u in span{Φ₁, Φ₂} makes det[[u, Φ₁, Φ₂], [u′, Φ₁′, Φ₂′], [u″, Φ₁″, Φ₂″]] vanish.
The leading coefficient of that equation is the Wronskian A = Φ₁²Θ with
Θ = d/dλ{ln λ² − 2γ − Ψ(1+λ) − Ψ(1−λ)}.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from hyperwkb.core.errors import ParameterError
from hyperwkb.mzvgen.genfun import delta2, u1_at_one

logger = logging.getLogger(__name__)

DIFF_STEP = 1e-4
DEFAULT_SAMPLES = (0.4,)
DEFAULT_POLE_SAMPLES = (0.9, 0.99, 0.999, 1.001, 1.01, 1.1, 1.9, 1.999, 2.001, 2.1)

LambdaFunction = Callable[[complex], complex]


def _phi1(lam: complex) -> complex:
    return delta2(lam)


def _phi2(lam: complex) -> complex:
    return u1_at_one(lam, "psi")


def lambda_jet(f: LambdaFunction, lam: complex, step: float = DIFF_STEP) -> np.ndarray:
    """[f, f′, f″] at lam by central differences with one Richardson step."""

    def central(h: float) -> tuple[complex, complex]:
        up, mid, down = f(lam + h), f(lam), f(lam - h)
        return (up - down) / (2 * h), (up - 2 * mid + down) / (h * h)

    d1_h, d2_h = central(step)
    d1_half, d2_half = central(step / 2)
    return np.array([f(lam), (4 * d1_half - d1_h) / 3, (4 * d2_half - d2_h) / 3], dtype=complex)


def determinant_ratio(
    u: LambdaFunction,
    lam: complex,
    phi1: LambdaFunction = _phi1,
    phi2: LambdaFunction = _phi2,
) -> float:
    """|det| divided by Σ_i |u^{(i)}|·|minor_i|, the size the determinant could have."""
    lc = complex(lam)
    mat = np.column_stack([lambda_jet(u, lc), lambda_jet(phi1, lc), lambda_jet(phi2, lc)])
    minors = [abs(np.linalg.det(np.delete(mat[:, 1:], i, axis=0))) for i in range(3)]
    scale = sum(abs(mat[i, 0]) * minors[i] for i in range(3))
    if scale == 0:
        raise ParameterError(f"the determinant scale vanishes at λ = {lc}", field="lam")
    return float(abs(np.linalg.det(mat)) / scale)


@dataclass(frozen=True, slots=True)
class ThetaSample:
    """Φ₁, Θ and A = Φ₁²Θ at a real λ > 0."""

    lam: float
    phi1: float
    theta: float
    a_coefficient: float

    @property
    def a_sign(self) -> int:
        return int(math.copysign(1, self.a_coefficient)) if self.a_coefficient else 0


def theta_sample(lam: float) -> ThetaSample:
    """Θ = 2/λ − ψ₁(1+λ) − ψ₁(λ) + π²/sin²(πλ), from the trigamma reflection formula."""
    if lam <= 0 or float(lam).is_integer():
        raise ParameterError(f"Θ is sampled at positive non-integer λ, got {lam}", field="lam")
    s = math.sin(math.pi * lam)
    theta = (
        2 / lam
        - float(sc.polygamma(1, 1 + lam))
        - float(sc.polygamma(1, lam))
        + math.pi**2 / (s * s)
    )
    phi1 = s / (math.pi * lam)
    return ThetaSample(lam, phi1, theta, phi1 * phi1 * theta)


@dataclass(frozen=True, slots=True)
class WitnessRow:
    lam: complex
    dependent_ratio: float
    generic_ratio: float


@dataclass(frozen=True, slots=True)
class LambdaWitness:
    rows: tuple[WitnessRow, ...]
    table: tuple[ThetaSample, ...]

    @property
    def max_dependent_ratio(self) -> float:
        return max(r.dependent_ratio for r in self.rows)

    @property
    def min_generic_ratio(self) -> float:
        return min(r.generic_ratio for r in self.rows)


def lambda_ode_witness(
    samples: Sequence[complex] = DEFAULT_SAMPLES,
    pole_samples: Sequence[float] = DEFAULT_POLE_SAMPLES,
) -> LambdaWitness:
    """Determinant ratios for u = 2Φ₁ + 3Φ₂ (dependent) and u = e^λ (generic) at each sample,
    plus a table of A(λ) next to the poles of Θ at the positive integers.
    """

    def dependent(x: complex) -> complex:
        return 2 * _phi1(x) + 3 * _phi2(x)

    rows: list[WitnessRow] = []
    for lam in samples:
        row = WitnessRow(
            complex(lam),
            determinant_ratio(dependent, lam),
            determinant_ratio(cmath.exp, lam),
        )
        logger.debug(
            f"lambda_ode_witness at {lam}: dependent {row.dependent_ratio:.2e}, "
            f"generic {row.generic_ratio:.2e}"
        )
        rows.append(row)
    table = tuple(theta_sample(x) for x in pole_samples)
    return LambdaWitness(tuple(rows), table)
