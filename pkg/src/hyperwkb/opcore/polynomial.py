"""Polynomials in the Euler derivative 𝒟 = t·d/dt."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from hyperwkb.core.scalars import Scalar


def _trim(coeffs: Sequence[Scalar]) -> tuple[Scalar, ...]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


@dataclass(frozen=True, slots=True)
class EulerPolynomial:
    """P(𝒟) = Σ p_k 𝒟^k with coefficients stored low to high."""

    coefficients: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, c: Scalar) -> EulerPolynomial:
        return cls((c,))

    @classmethod
    def identity(cls) -> EulerPolynomial:
        """The polynomial x, i.e. 𝒟 itself."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> EulerPolynomial:
        """lead·∏(x − r)."""
        poly = cls.constant(lead)
        for r in roots:
            poly = poly * cls((-r, 1))
        return poly

    @classmethod
    def falling_factorial(cls, k: int) -> EulerPolynomial:
        """x(x−1)…(x−k+1), so that x^k d^k/dx^k = P(𝒟)."""
        return cls.from_roots(range(k))

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0] == 0

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: EulerPolynomial) -> EulerPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        a = (*self.coefficients, *([0] * (n - len(self.coefficients))))
        b = (*other.coefficients, *([0] * (n - len(other.coefficients))))
        return EulerPolynomial(tuple(x + y for x, y in zip(a, b, strict=True)))

    def __neg__(self) -> EulerPolynomial:
        return EulerPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: EulerPolynomial) -> EulerPolynomial:
        return self + (-other)

    def __mul__(self, other: EulerPolynomial | Scalar) -> EulerPolynomial:
        if not isinstance(other, EulerPolynomial):
            return EulerPolynomial(tuple(c * other for c in self.coefficients))
        out: list[Scalar] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return EulerPolynomial(tuple(out))

    __rmul__ = __mul__

    def taylor_at(self, a: Scalar) -> list[Scalar]:
        """[P(a), P'(a), P''(a)/2!, …] by repeated synthetic division."""
        c = list(self.coefficients)
        n = len(c) - 1
        for k in range(n):
            for i in range(n - 1, k - 1, -1):
                c[i] = c[i] + a * c[i + 1]
        return c

    def shift(self, a: Scalar) -> EulerPolynomial:
        """P(x + a); realizes 𝒟∘t^a = t^a∘(𝒟 + a)."""
        return EulerPolynomial(tuple(self.taylor_at(a)))

    def scale(self, c: Scalar) -> EulerPolynomial:
        """P(c·x)."""
        out: list[Scalar] = []
        power: Scalar = 1
        for p in self.coefficients:
            out.append(p * power)
            power = power * c
        return EulerPolynomial(tuple(out))

    def act_on_logs(self, a: Scalar, vec: Sequence[Scalar]) -> list[Scalar]:
        """Action on t^a·Σ v_j (ln t)^j/j!: w_i = Σ_k P^{(k)}(a)/k! · v_{i+k}."""
        tay = self.taylor_at(a)
        out: list[Scalar] = []
        for i in range(len(vec)):
            acc: Scalar = 0
            for k, tk in enumerate(tay):
                if i + k >= len(vec):
                    break
                v = vec[i + k]
                if v != 0 and tk != 0:
                    acc = acc + tk * v
            out.append(acc)
        return out

    def roots(self) -> list[complex]:
        if self.degree < 1:
            return []
        arr = np.array([complex(c) for c in reversed(self.coefficients)], dtype=complex)
        return [complex(r) for r in np.roots(arr)]

    def __repr__(self) -> str:
        return f"EulerPolynomial({list(self.coefficients)!r})"
