"""Elementary and complete symmetric polynomials, and the restricted quadratic form."""

from __future__ import annotations

import cmath
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import factorial

import numpy as np
import scipy.linalg as la

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar


@dataclass(frozen=True, slots=True)
class SymmetricEval:
    """e_k for k <= n and requested h_p of a value tuple."""

    values: tuple[Scalar, ...]
    elementary: tuple[Scalar, ...]
    complete: dict[int, Scalar] = field(default_factory=dict[int, Scalar])

    def e(self, k: int) -> Scalar:
        if k < 0 or k >= len(self.elementary):
            return 0
        return self.elementary[k]

    def h(self, p: int) -> Scalar:
        return self.complete[p]


def elementary_symmetric(values: Sequence[Scalar]) -> list[Scalar]:
    """[e_0, ..., e_n] as the coefficients of ∏(x + λ_j), highest power first."""
    coeffs: list[Scalar] = [1]
    for lam in values:
        nxt: list[Scalar] = [*coeffs, 0]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] + lam * coeffs[k - 1]
        coeffs = nxt
    return coeffs


def complete_homogeneous(values: Sequence[Scalar], p: int) -> Scalar:
    """h_p via h_m = Σ_{k>=1} (-1)^{k-1} e_k h_{m-k}."""
    if p < 0:
        return 0
    e = elementary_symmetric(values)
    h: list[Scalar] = [1]
    for m in range(1, p + 1):
        acc: Scalar = 0
        for k in range(1, min(m, len(e) - 1) + 1):
            term = e[k] * h[m - k]
            acc = acc + term if k % 2 == 1 else acc - term
        h.append(acc)
    return h[p]


def symmetric_eval(values: Sequence[Scalar], complete: Sequence[int] = ()) -> SymmetricEval:
    vals = tuple(values)
    return SymmetricEval(
        values=vals,
        elementary=tuple(elementary_symmetric(vals)),
        complete={p: complete_homogeneous(vals, p) for p in complete},
    )


def restricted_quadform_det(lams: Sequence[Scalar]) -> Scalar:
    """Determinant of Σλ_jθ_j² on Σθ_j = 0, which equals e_q(λ₁..λ_{q+1})."""
    if len(lams) < 2:
        raise ParameterError("need at least two values", field="lams")
    return elementary_symmetric(lams)[len(lams) - 1]


def restricted_form_matrix(lams: Sequence[Scalar]) -> np.ndarray:
    """Matrix of the form after eliminating θ₁: M_jk = λ₁ + δ_jk λ_j."""
    n = len(lams) - 1
    mat = np.full((n, n), complex(lams[0]), dtype=complex)
    for j in range(n):
        mat[j, j] += complex(lams[j + 1])
    return mat


def brute_force_restricted_det(lams: Sequence[Scalar]) -> complex:
    """Determinant of the substituted form by explicit LU factorization."""
    if len(lams) < 2:
        raise ParameterError("need at least two values", field="lams")
    lu, piv = la.lu_factor(restricted_form_matrix(lams))
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    det = complex(np.prod(np.diag(lu)))
    return -det if swaps % 2 else det


def exp_divided_difference(x: complex, y: complex, order: int) -> tuple[complex, complex]:
    """(Σ_{k+l<=P} x^k y^l/(k+l)!, (x e^x − y e^y)/(x − y))."""
    partial = sum(
        (complete_homogeneous((x, y), m) / factorial(m) for m in range(order + 1)), 0j
    )
    closed = (x * cmath.exp(x) - y * cmath.exp(y)) / (x - y)
    return complex(partial), closed
