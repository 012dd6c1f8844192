"""Exponent data and amplitudes of formal WKB solutions."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from hyperwkb.core.scalars import Scalar
from hyperwkb.opcore.series import GradedSeries


def unit_root(k: int, d: int) -> Scalar:
    """ζ^k with ζ = e^{2πi/d}; exact when the value is ±1."""
    k %= d
    if k == 0:
        return 1
    if 2 * k == d:
        return -1
    return cmath.exp(2j * cmath.pi * k / d)


@dataclass(frozen=True, slots=True)
class WKBForm:
    """e^{c·t^κ}·t^μ·H(t^{−κ}) with H = 1 + h₁w + h₂w² + … in w = t^{−κ}.

    The amplitude is stored in the variable 1/t on the lattice 1/d, d = 1/κ, so that its
    n-th coefficient multiplies (1/t)^{n/d} = wⁿ.
    """

    kappa: Fraction
    c: Scalar
    mu: Scalar
    amplitude: GradedSeries
    branch: int = 0

    @property
    def degree(self) -> int:
        """d = q + 1 − p."""
        return self.kappa.denominator

    def amplitude_at(self, w: complex) -> complex:
        acc = 0j
        for h in reversed(self.amplitude.coefficients):
            acc = acc * w + complex(h)
        return acc

    def evaluate(self, t: complex, terms: int | None = None) -> complex:
        """Principal-branch value; terms limits the amplitude truncation."""
        log_t = cmath.log(complex(t))
        big_t = cmath.exp(float(self.kappa) * log_t)
        form = self if terms is None else self.truncated(terms)
        return (
            cmath.exp(complex(self.c) * big_t + complex(self.mu) * log_t)
            * form.amplitude_at(1 / big_t)
        )

    def truncated(self, terms: int) -> WKBForm:
        return WKBForm(
            self.kappa, self.c, self.mu, self.amplitude.truncate(max(terms - 1, 0)), self.branch
        )
