"""Behaviour of Δ₂, Δ₃ and u₁(1; λ) as |λ| → ∞."""

from __future__ import annotations

import cmath
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.frobenius.at_one import EPSILON
from hyperwkb.mzvgen.genfun import delta2, delta3, u1_at_one
from hyperwkb.special.bernoulli import bernoulli
from hyperwkb.special.gamma import EULER_GAMMA

logger = logging.getLogger(__name__)

ASYMPTOTIC_RADIUS = 3.0
OMEGA_TERMS = 4

Sector = Literal["upper", "lower"]


@dataclass(frozen=True, slots=True)
class Identity522:
    """Δ₃(λ)Δ₃(−λ) against Δ₂(λ)Δ₂(ελ)Δ₂(ε̄λ) and its exponential form."""

    lam: complex
    lhs: complex
    rhs: complex
    exponential: complex

    @property
    def diff(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def exponential_gap(self) -> float:
        """Relative gap between the exponential combination and the Gamma side."""
        return abs(self.exponential - self.lhs) / max(abs(self.lhs), 1e-300)


def exponential_combination(lam: Scalar) -> complex:
    """i/(2πλ)³·{(e^{2πiλ} − e^{−2πiλ}) − (e^{(i−√3)πλ} − c.c.) − (e^{(i+√3)πλ} − c.c.)}.

    Here c.c. stands for the same exponential with the opposite sign in the exponent.
    """
    lc = complex(lam)
    if lc == 0:
        return 1 + 0j
    root3 = 3**0.5

    def pair(w: complex) -> complex:
        return cmath.exp(w * cmath.pi * lc) - cmath.exp(-w * cmath.pi * lc)

    bracket = pair(2j) - pair(-root3 + 1j) - pair(root3 + 1j)
    return 1j / (2 * cmath.pi * lc) ** 3 * bracket


def identity_522(lam: Scalar) -> Identity522:
    """∏(1 − λ⁶/n⁶) computed three ways; the exponential form is exact, not only asymptotic."""
    lc = complex(lam)
    lhs = delta3(lc) * delta3(-lc)
    rhs = delta2(lc) * delta2(-EPSILON * lc) * delta2(-EPSILON.conjugate() * lc)
    out = Identity522(lc, lhs, rhs, exponential_combination(lc))
    logger.debug(f"identity_522({lc}): diff {out.diff:.2e}, exp gap {out.exponential_gap:.2e}")
    return out


def omega(z: Scalar, terms: int = OMEGA_TERMS) -> complex:
    """Ω(1/z) in Ψ(1+z) = ln z + 1/(2z) + Ω(1/z):

    ln(1 + 1/z) − 1/z + 1/(2z(z+1)) − Σ_{n≤terms} B_{2n}/(2n)·(z+1)^{−2n}.
    """
    if terms < 0:
        raise ParameterError("terms must be nonnegative", field="terms")
    zc = complex(z)
    if zc == 0 or zc == -1:
        raise ParameterError(f"Ω(1/z) is undefined at z = {zc}", field="z")
    acc = cmath.log(1 + 1 / zc) - 1 / zc + 1 / (2 * zc * (zc + 1))
    inv2 = 1 / (zc + 1) ** 2
    power = inv2
    for n in range(1, terms + 1):
        acc -= float(bernoulli(2 * n)) / (2 * n) * power
        power *= inv2
    return acc


def sector_formula(lam: Scalar, sector: Sector, terms: int = OMEGA_TERMS) -> complex:
    """Large-λ form of u₁(1; λ) without the sector check.

    upper: 2Δ₂(λ){−γ − Ω(1/λ)} − cos(πλ)/λ
    lower: 2Δ₂(λ){−γ − Ω(−1/λ) − iπ} + cos(πλ)/λ
    """
    lc = complex(lam)
    d2 = delta2(lc)
    c = cmath.cos(cmath.pi * lc) / lc
    if sector == "upper":
        return 2 * d2 * (-EULER_GAMMA - omega(lc, terms)) - c
    if sector == "lower":
        return 2 * d2 * (-EULER_GAMMA - omega(-lc, terms) - 1j * cmath.pi) + c
    raise ParameterError(f"Unknown sector {sector!r}", field="sector")


def _check_sector(lc: complex, sector: Sector) -> None:
    if abs(lc) < ASYMPTOTIC_RADIUS:
        raise ParameterError(
            f"the large-λ forms need |λ| >= {ASYMPTOTIC_RADIUS}, got {abs(lc):.3g}", field="lam"
        )
    if sector == "upper" and lc.imag == 0 and lc.real < 0:
        raise ParameterError("λ lies on the boundary arg λ = π of the upper sector", field="lam")
    if sector == "lower" and lc.imag >= 0:
        raise ParameterError("the lower sector needs π < arg λ < 2π", field="lam")


def phi2_asymptotic(lam: Scalar, sector: Sector = "upper", terms: int = OMEGA_TERMS) -> complex:
    lc = complex(lam)
    _check_sector(lc, sector)
    return sector_formula(lc, sector, terms)


def phi2_relative_error(lam: Scalar, sector: Sector = "upper", terms: int = OMEGA_TERMS) -> float:
    """|sector form − u₁(1; λ)|/|u₁(1; λ)| with the digamma route as reference."""
    lc = complex(lam)
    exact = u1_at_one(lc, "psi")
    return abs(phi2_asymptotic(lc, sector, terms) - exact) / abs(exact)


def stokes_jump(lam: Scalar) -> complex:
    """Lower minus upper sector form, both continued into Im λ > 0: −4πi·Δ₂(λ)."""
    return -4j * cmath.pi * delta2(lam)


@dataclass(frozen=True, slots=True)
class Nullspace:
    """Exact nullspace of a homogeneous rational system."""

    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return not self.basis


def rational_nullspace(rows: Sequence[Sequence[Fraction]]) -> Nullspace:
    """Gauss-Jordan elimination over Q."""
    mat = [list(r) for r in rows]
    n_cols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        mat[rank] = [v / lead for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank], strict=True)]
        pivots.append(col)
        rank += 1
    basis: list[tuple[Fraction, ...]] = []
    for free in (c for c in range(n_cols) if c not in pivots):
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row, col in enumerate(pivots):
            vec[col] = -mat[row][free]
        basis.append(tuple(vec))
    given = tuple(tuple(Fraction(v) for v in row) for row in rows)
    return Nullspace(given, len(pivots), tuple(basis))


def sector_expansion_nullspace(
    a: int | Fraction, b: int | Fraction, c: int | Fraction
) -> Nullspace:
    """Solutions (α, β, γ) of the system forced by matching Δ₃(λ)Δ₃(−λ) sector by sector.

    Given the coefficients (a, b, c) of Δ₃(λ) on the three exponential branches, the
    branches of Δ₃(−λ) must satisfy aα + bβ + cγ = 0, cβ + bγ = 0, bα + aβ = 0 and
    cα + aγ = 0. With a, b, c all nonzero only the trivial solution remains.
    """
    fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
    zero = Fraction(0)
    rows = [
        (fa, fb, fc),
        (zero, fc, fb),
        (fb, fa, zero),
        (fc, zero, fa),
    ]
    out = rational_nullspace(rows)
    logger.debug(f"sector_expansion_nullspace({a}, {b}, {c}): rank {out.rank}")
    return out
