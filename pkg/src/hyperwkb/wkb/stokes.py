"""Stokes constants of Kummer's function ₁F₁(α; β; t) at t = ∞."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Literal

from hyperwkb.core.errors import HyperwkbError, ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.special.gamma import gamma

logger = logging.getLogger(__name__)

RELATION_TOL = 1e-9

StokesLineVariant = Literal["printed", "corrected"]


@dataclass(frozen=True, slots=True)
class KummerStokes:
    """Connection data of u₀ = F(α;β;t) and u₁ = t^{1−β}F(α−β+1;2−β;t).

    On the upper Stokes line u₀ = A·v₁⁺ + B·v₂⁺ and u₁ = C·v₁⁺ + D·v₂⁺; the Stokes
    matrices are fixed by c (across S_π) and d (across S₀).
    """

    alpha: complex
    beta: complex
    A: complex
    B: complex
    C: complex
    D: complex
    c: complex
    d: complex
    zeta: complex
    nuconst: complex

    @property
    def relation_residual(self) -> float:
        """|cd − (ζ − 1)(1 − νζ)|."""
        return abs(self.c * self.d - (self.zeta - 1) * (1 - self.nuconst * self.zeta))


def _phase(x: complex) -> complex:
    """e^{iπx}."""
    return cmath.exp(1j * cmath.pi * x)


def kummer_stokes(alpha: Scalar, beta: Scalar) -> KummerStokes:
    a = complex(alpha)
    b = complex(beta)
    zeta = _phase(2 * a)
    nuconst = _phase(-2 * b)
    g_b = gamma(b)
    g_ba = gamma(b - a)
    g_a = gamma(a)
    half = _phase(a)  # ζ^{1/2}
    big_a = g_b / g_ba / half
    out = KummerStokes(
        alpha=a,
        beta=b,
        A=big_a,
        B=g_b / g_a,
        C=big_a,
        D=gamma(2 - b) / gamma(a - b + 1),
        c=g_ba / g_a * (1 - nuconst * zeta) / half / nuconst,
        d=g_a / g_ba * (zeta - 1) * half * nuconst,
        zeta=zeta,
        nuconst=nuconst,
    )
    residual = out.relation_residual
    scale = max(1.0, abs((zeta - 1) * (1 - nuconst * zeta)))
    if residual > RELATION_TOL * scale:
        raise HyperwkbError(f"Stokes relation violated: |cd − (ζ−1)(1−νζ)| = {residual:.3e}")
    logger.debug(f"kummer_stokes({a}, {b}): c={out.c:.6g}, d={out.d:.6g}")
    return out


def kummer_upper_line_asymptotic(
    alpha: Scalar, beta: Scalar, s: float, variant: StokesLineVariant = "corrected"
) -> complex:
    """Two-term large-s approximation of F(α; β; is), s > 0.

    "printed" carries ζ^{−1/4} on the algebraic term; "corrected" carries ζ^{1/4} = e^{iπα/2},
    which is what (−is)^{−α} gives.
    """
    if s <= 0:
        raise ParameterError("s must be positive", field="s")
    a = complex(alpha)
    b = complex(beta)
    quarter = _phase(a / 2) if variant == "corrected" else _phase(-a / 2)
    algebraic = gamma(b) / gamma(b - a) * quarter * s ** (-a)
    exponential = gamma(b) / gamma(a) * _phase((a - b) / 2) * s ** (a - b) * cmath.exp(1j * s)
    return algebraic + exponential


def kummer_lower_line_asymptotic(
    alpha: Scalar, beta: Scalar, s: float, variant: StokesLineVariant = "corrected"
) -> complex:
    """Two-term large-s approximation of F(α; β; −is), s > 0.

    "corrected" is the mirror of the upper line: ζ^{−1/4} on the algebraic term and (νζ)^{−1/4}
    on e^{−is}. "printed" carries ζ^{−3/4} and [1 + (1 − νζ)ζ^{−1/2}ν^{−1}](νζ)^{3/4}.
    """
    if s <= 0:
        raise ParameterError("s must be positive", field="s")
    a = complex(alpha)
    b = complex(beta)
    if variant == "corrected":
        quarter = _phase(-a / 2)
        connection = _phase((b - a) / 2)
    else:
        zeta = _phase(2 * a)
        nuconst = _phase(-2 * b)
        quarter = _phase(-3 * a / 2)
        bracket = 1 + (1 - nuconst * zeta) / _phase(a) / nuconst
        connection = bracket * _phase(3 * (a - b) / 2)
    algebraic = gamma(b) / gamma(b - a) * quarter * s ** (-a)
    exponential = gamma(b) / gamma(a) * connection * s ** (a - b) * cmath.exp(-1j * s)
    return algebraic + exponential
