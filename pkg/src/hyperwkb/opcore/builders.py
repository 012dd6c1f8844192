"""Constructors for hypergeometric operators and the t ↦ 1−t substitution."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import TYPE_CHECKING

from hyperwkb.core.errors import LatticeError, ParameterError
from hyperwkb.core.scalars import is_nonpositive_integer
from hyperwkb.opcore.operator import MellinOperator, clear_negative_powers
from hyperwkb.opcore.polynomial import EulerPolynomial

if TYPE_CHECKING:
    from hyperwkb.series.params import HyperParams

logger = logging.getLogger(__name__)


def hypergeometric_polynomials(params: HyperParams) -> tuple[EulerPolynomial, EulerPolynomial]:
    """(Q, P) with Q = 𝒟∏(𝒟+β_j−1) and P = ∏(𝒟+α_i)."""
    for j, b in enumerate(params.lower):
        if is_nonpositive_integer(b, tol=1e-14):
            raise ParameterError(f"lower parameter β[{j}] = {b} is a nonpositive integer",
                                 field="lower", index=j)
    q = EulerPolynomial.from_roots([0, *(1 - b for b in params.lower)])
    p = EulerPolynomial.from_roots([-a for a in params.upper])
    return q, p


def build_hypergeometric_operator(params: HyperParams) -> MellinOperator:
    """Q(𝒟) − t·P(𝒟), annihilating pFq(α; β; t)."""
    q, p = hypergeometric_polynomials(params)
    return MellinOperator(((Fraction(0), q), (Fraction(1), -p)))


def one_minus_t_transform(op: MellinOperator, order: int = 0) -> tuple[MellinOperator, Fraction]:
    """Rewrite op in s = 1 − var, clear negative s-powers; returns (op', power cleared).

    Uses 𝒟_t = (1 − s⁻¹)𝒟_s. Negative integer offsets expand (1−s)^m to order.
    """
    if op.lattice != 1:
        raise LatticeError("t ↦ 1−t needs an operator on the integer lattice")
    target = "s" if op.variable == "t" else "t"
    d_t = MellinOperator(
        ((Fraction(0), EulerPolynomial.identity()), (Fraction(-1), -EulerPolynomial.identity())),
        1,
        target,
    )
    total = MellinOperator((), 1, target)
    for m, p in op.terms:
        factor = MellinOperator.binomial(int(m), -1, target, order)
        total = total + (factor @ d_t.substitute_polynomial(p))
    cleared, shift = clear_negative_powers(total)
    logger.debug(f"one_minus_t_transform: cleared {target}^{shift}, order {cleared.order}")
    return cleared, shift


def substitute_one_minus_t(op: MellinOperator, order: int = 0) -> MellinOperator:
    """The same operator written in s = 1 − t, as Σ s^j P_j(𝒟_s)."""
    return one_minus_t_transform(op, order)[0]
