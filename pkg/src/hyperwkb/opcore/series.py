"""Truncated series Σ c_n var^{γ + n/L} on a rational exponent lattice."""

from __future__ import annotations

import cmath
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Literal

from hyperwkb.core.errors import LatticeError, ParameterError
from hyperwkb.core.scalars import Scalar, div, is_exact

Variable = Literal["t", "s", "1/t", "z", "y", "x", "mu"]

LATTICE_TOL = 1e-9


def lattice_offset(start: Scalar, target: Scalar, lattice: int) -> int:
    """Integer k with target = start + k/L; raises LatticeError otherwise."""
    d = (target - start) * lattice
    if isinstance(d, int | Fraction):
        if Fraction(d).denominator != 1:
            raise LatticeError(f"exponents {start} and {target} are not on a 1/{lattice} lattice")
        return int(d)
    dc = complex(d)
    k = round(dc.real)
    if abs(dc.imag) > LATTICE_TOL or abs(dc.real - k) > LATTICE_TOL:
        raise LatticeError(f"exponents {start} and {target} are not on a 1/{lattice} lattice")
    return k


def _power(x: Scalar, e: Scalar) -> Scalar:
    if isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1):
        return x ** int(e)
    if x == 1:
        return 1
    return complex(x) ** complex(e)


@dataclass(frozen=True, slots=True)
class GradedSeries:
    """Σ_{n=0}^{N} c_n var^{γ + n/L}, known exactly below var^{γ + (N+1)/L}."""

    variable: Variable
    lattice: int
    leading_exponent: Scalar
    coefficients: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.lattice < 1:
            raise ParameterError("lattice denominator must be positive", field="lattice")
        if not self.coefficients:
            raise ParameterError("a series needs at least one coefficient", field="coefficients")

    # Construction
    @classmethod
    def from_coefficients(
        cls,
        coefficients: Sequence[Scalar],
        *,
        variable: Variable = "t",
        lattice: int = 1,
        leading_exponent: Scalar = 0,
    ) -> GradedSeries:
        """Build and normalize so that c₀ ≠ 0 unless the series is zero."""
        return cls(variable, lattice, leading_exponent, tuple(coefficients)).normalized()

    @classmethod
    def zero(
        cls, order: int, *, variable: Variable = "t", lattice: int = 1, leading_exponent: Scalar = 0
    ) -> GradedSeries:
        return cls(variable, lattice, leading_exponent, (0,) * (order + 1))

    @classmethod
    def monomial(
        cls,
        exponent: Scalar,
        order: int,
        *,
        coefficient: Scalar = 1,
        variable: Variable = "t",
        lattice: int = 1,
    ) -> GradedSeries:
        return cls(variable, lattice, exponent, (coefficient,) + (0,) * order)

    # Bookkeeping
    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def cutoff(self) -> Scalar:
        """First exponent whose coefficient is unknown."""
        return self.leading_exponent + Fraction(len(self.coefficients), self.lattice)

    def exponent(self, n: int) -> Scalar:
        return self.leading_exponent + Fraction(n, self.lattice)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_exact(self) -> bool:
        return is_exact(self.leading_exponent) and all(is_exact(c) for c in self.coefficients)

    def normalized(self) -> GradedSeries:
        """Drop leading zero coefficients, moving γ up; the cutoff is unchanged."""
        k = 0
        while k < len(self.coefficients) - 1 and self.coefficients[k] == 0:
            k += 1
        if k == 0 or self.is_zero():
            return self
        return GradedSeries(
            self.variable, self.lattice, self.exponent(k), self.coefficients[k:]
        )

    def regrid(self, lattice: int) -> GradedSeries:
        """Re-express on a finer lattice 1/L' (L' a multiple of L)."""
        if lattice == self.lattice:
            return self
        if lattice % self.lattice:
            raise LatticeError(f"cannot regrid 1/{self.lattice} onto 1/{lattice}")
        r = lattice // self.lattice
        out: list[Scalar] = [0] * (r * len(self.coefficients))
        for n, c in enumerate(self.coefficients):
            out[r * n] = c
        return GradedSeries(self.variable, lattice, self.leading_exponent, tuple(out))

    def truncate(self, order: int) -> GradedSeries:
        if order >= self.truncation_order:
            return self
        return GradedSeries(
            self.variable, self.lattice, self.leading_exponent, self.coefficients[: order + 1]
        )

    def rebase(self, leading_exponent: Scalar, length: int) -> tuple[Scalar, ...]:
        """Coefficients on the grid starting at a lower (or equal) exponent, padded to length."""
        k = lattice_offset(leading_exponent, self.leading_exponent, self.lattice)
        if k < 0:
            raise LatticeError("rebase target lies above the leading exponent")
        out: list[Scalar] = [0] * length
        for n, c in enumerate(self.coefficients):
            if k + n >= length:
                break
            out[k + n] = c
        return tuple(out)

    def _check_compatible(self, other: GradedSeries) -> int:
        if self.variable != other.variable:
            raise LatticeError(f"variable mismatch: {self.variable} vs {other.variable}")
        return lcm(self.lattice, other.lattice)

    # Arithmetic
    def __add__(self, other: GradedSeries) -> GradedSeries:
        L = self._check_compatible(other)
        a, b = self.regrid(L), other.regrid(L)
        k = lattice_offset(a.leading_exponent, b.leading_exponent, L)
        lo, hi = (a, b) if k >= 0 else (b, a)
        k = abs(k)
        length = min(len(lo.coefficients), k + len(hi.coefficients))
        ca = lo.rebase(lo.leading_exponent, length)
        cb = hi.rebase(lo.leading_exponent, length)
        coeffs = tuple(x + y for x, y in zip(ca, cb, strict=True))
        return GradedSeries(self.variable, L, lo.leading_exponent, coeffs)

    def __neg__(self) -> GradedSeries:
        return self.scale(-1)

    def __sub__(self, other: GradedSeries) -> GradedSeries:
        return self + (-other)

    def scale(self, c: Scalar) -> GradedSeries:
        return GradedSeries(
            self.variable,
            self.lattice,
            self.leading_exponent,
            tuple(x * c for x in self.coefficients),
        )

    def __mul__(self, other: GradedSeries | Scalar) -> GradedSeries:
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        L = self._check_compatible(other)
        a, b = self.regrid(L), other.regrid(L)
        n = min(len(a.coefficients), len(b.coefficients))
        out: list[Scalar] = [0] * n
        for i in range(n):
            ai = a.coefficients[i]
            if ai == 0:
                continue
            for j in range(n - i):
                bj = b.coefficients[j]
                if bj != 0:
                    out[i + j] = out[i + j] + ai * bj
        return GradedSeries(self.variable, L, a.leading_exponent + b.leading_exponent, tuple(out))

    __rmul__ = __mul__

    def shift(self, a: Scalar) -> GradedSeries:
        """Multiply by var^a."""
        return GradedSeries(
            self.variable, self.lattice, self.leading_exponent + a, self.coefficients
        )

    def euler_derivative(self) -> GradedSeries:
        """𝒟 = var·d/dvar acts by c_n ↦ (γ + n/L)c_n."""
        return GradedSeries(
            self.variable,
            self.lattice,
            self.leading_exponent,
            tuple(c * self.exponent(n) for n, c in enumerate(self.coefficients)),
        )

    def derivative(self) -> GradedSeries:
        """d/dvar."""
        return self.euler_derivative().shift(-1)

    def scale_variable(self, c: Scalar) -> GradedSeries:
        """f(c·var) term by term, principal powers of c."""
        return GradedSeries(
            self.variable,
            self.lattice,
            self.leading_exponent,
            tuple(x * _power(c, self.exponent(n)) for n, x in enumerate(self.coefficients)),
        )

    def power(self, e: Scalar) -> GradedSeries:
        """f^e for f with nonzero leading coefficient (J.C.P. Miller recurrence)."""
        f = self.normalized()
        a = f.coefficients
        if a[0] == 0:
            raise ParameterError("power of a series with zero leading term", field="series")
        a0 = a[0]
        g: list[Scalar] = [1]
        for k in range(1, len(a)):
            acc: Scalar = 0
            for j in range(1, k + 1):
                if a[j] != 0:
                    acc = acc + ((e + 1) * j - k) * a[j] * g[k - j]
            g.append(div(acc, k * a0))
        lead = _power(a0, e)
        return GradedSeries(
            f.variable, f.lattice, f.leading_exponent * e, tuple(lead * x for x in g)
        )

    # Evaluation
    def evaluate(self, x: complex) -> complex:
        """Principal-branch value Σ c_n x^{γ + n/L}."""
        xc = complex(x)
        if xc == 0:
            if self.is_zero():
                return 0j
            lead = complex(self.leading_exponent)
            if lead == 0:
                return complex(self.coefficients[0])
            if lead.real > 0:
                return 0j
            raise ParameterError("series is singular at the origin", field="x")
        logx = cmath.log(xc)
        step = cmath.exp(logx / self.lattice)
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * step + complex(c)
        return acc * cmath.exp(complex(self.leading_exponent) * logx)

    def max_abs_diff(self, other: GradedSeries) -> float:
        diff = (self - other).coefficients
        return max(float(abs(c)) for c in diff)

    def __repr__(self) -> str:
        return (
            f"GradedSeries({self.variable}, L={self.lattice}, γ={self.leading_exponent}, "
            f"N={self.truncation_order})"
        )
