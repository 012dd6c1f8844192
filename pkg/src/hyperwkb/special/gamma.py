"""Gamma, Beta and digamma functions."""

from __future__ import annotations

import cmath
from typing import Literal

import scipy.special as sc

from hyperwkb.core.errors import ParameterError, PoleError
from hyperwkb.core.scalars import Scalar, is_nonpositive_integer
from hyperwkb.special.bernoulli import bernoulli

EULER_GAMMA = 0.57721566490153286061
DIGAMMA_SHIFT_RADIUS = 12.0
DIGAMMA_ASYMPTOTIC_TERMS = 8

ReflectionVariant = Literal["cot", "arctan"]


def _check_pole(z: Scalar, name: str) -> complex:
    if is_nonpositive_integer(z, tol=1e-14):
        raise PoleError(f"{name} has a pole at {z}", point=complex(z))
    return complex(z)


def gamma(z: Scalar) -> complex:
    """Euler Gamma function, reflected into Re z >= 1/2."""
    zc = _check_pole(z, "Gamma")
    if zc.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * zc) * complex(sc.gamma(1.0 - zc)))
    return complex(sc.gamma(zc))


def rgamma(z: Scalar) -> complex:
    """Reciprocal Gamma; entire, zero at the poles of Gamma."""
    if is_nonpositive_integer(z, tol=1e-14):
        return 0j
    return 1.0 / gamma(z)


def loggamma(z: Scalar) -> complex:
    """Principal branch of log Gamma."""
    zc = _check_pole(z, "log Gamma")
    return complex(sc.loggamma(zc))


def beta(a: Scalar, b: Scalar) -> complex:
    """Euler Beta function B(a, b) = Γ(a)Γ(b)/Γ(a+b)."""
    return gamma(a) * gamma(b) * rgamma(complex(a) + complex(b))


def digamma(z: Scalar) -> complex:
    """Logarithmic derivative of Gamma.

    Shifts z upward with Ψ(z+1) = Ψ(z) + 1/z until |z| > 12 and Re z >= 0,
    then sums the Stirling series with Bernoulli numbers through B₁₆.
    """
    zc = _check_pole(z, "digamma")
    acc = 0j
    while abs(zc) <= DIGAMMA_SHIFT_RADIUS or zc.real < 0.0:
        acc -= 1.0 / zc
        zc += 1.0
    inv2 = 1.0 / (zc * zc)
    tail = 0j
    power = inv2
    for n in range(1, DIGAMMA_ASYMPTOTIC_TERMS + 1):
        tail += float(bernoulli(2 * n)) / (2 * n) * power
        power *= inv2
    return acc + cmath.log(zc) - 0.5 / zc - tail


def digamma_reflection_residual(z: Scalar, variant: ReflectionVariant = "cot") -> complex:
    """Ψ(1+z) − Ψ(1−z) + π·X(πz) − 1/z.

    variant "cot" uses X = cot, the standard reflection identity, and vanishes.
    variant "arctan" reads the trigonometric factor as the inverse tangent.
    """
    zc = complex(z)
    if variant == "cot":
        x = cmath.cos(cmath.pi * zc) / cmath.sin(cmath.pi * zc)
    elif variant == "arctan":
        x = cmath.atan(cmath.pi * zc)
    else:
        raise ParameterError(f"Unknown reflection variant {variant!r}", field="variant")
    return digamma(1.0 + zc) - digamma(1.0 - zc) + cmath.pi * x - 1.0 / zc


def zeta(s: float) -> float:
    """Riemann zeta at a real argument s > 1."""
    if s <= 1.0:
        raise ParameterError(f"zeta needs s > 1, got {s}", field="s")
    return float(sc.zeta(s, 1.0))
