"""Langer normalization of ε²u'' = (xφ(x) + εψ)u to the Airy form."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar, div
from hyperwkb.opcore.series import GradedSeries


def _as_series(phi: GradedSeries | Sequence[Scalar], order: int) -> GradedSeries:
    """Polynomial coefficients are padded with zeros up to x^order."""
    if isinstance(phi, GradedSeries):
        return phi.truncate(order)
    coeffs = tuple(phi)[: order + 1]
    return GradedSeries("x", 1, 0, coeffs + (0,) * (order + 1 - len(coeffs)))


def _integrate(f: GradedSeries) -> GradedSeries:
    """∫₀ˣ f for Re γ > −1."""
    return GradedSeries(
        f.variable,
        f.lattice,
        f.leading_exponent + 1,
        tuple(div(c, f.exponent(n) + 1) for n, c in enumerate(f.coefficients)),
    )


def langer_normalize(
    phi: GradedSeries | Sequence[Scalar], order: int
) -> tuple[GradedSeries, GradedSeries]:
    """(z(x), b(x)) with (dx/dz)²·xφ(x) = z and b = (dz/dx)^{−1/2}.

    z = ((3/2)∫₀ˣ √(sφ(s)) ds)^{2/3}, so φ ≡ 1 gives z = x.
    """
    f = _as_series(phi, order)
    if f.leading_exponent != 0 or f.coefficients[0] != 1:
        raise ParameterError("φ must satisfy φ(0) = 1", field="phi")
    root = f.power(Fraction(1, 2)).shift(Fraction(1, 2))
    action = _integrate(root).scale(Fraction(3, 2))
    z = action.power(Fraction(2, 3))
    b = z.derivative().power(Fraction(-1, 2))
    return z, b


def langer_residual(phi: GradedSeries | Sequence[Scalar], z: GradedSeries) -> float:
    """Largest coefficient of (z')^{−2}·xφ − z."""
    f = _as_series(phi, z.truncation_order)
    lhs = z.derivative().power(-2) * f.shift(1)
    return max(float(abs(c)) for c in (lhs - z).coefficients)
