"""Scalar type shared by exact and floating arithmetic."""

from __future__ import annotations

from fractions import Fraction
from typing import TypeAlias

Scalar: TypeAlias = int | Fraction | float | complex


def is_exact(x: Scalar) -> bool:
    """True for int and Fraction values."""
    return isinstance(x, int | Fraction) and not isinstance(x, bool)


def is_nonpositive_integer(x: Scalar, tol: float = 0.0) -> bool:
    """True if x lies on {0, -1, -2, ...}."""
    if isinstance(x, int | Fraction):
        return x <= 0 and Fraction(x).denominator == 1
    z = complex(x)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def div(a: Scalar, b: Scalar) -> Scalar:
    """a / b, exact when both operands are exact."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b
