"""Chains of variations u_{0,k} and their cross-checks."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from math import factorial

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar, div, is_exact
from hyperwkb.opcore import (
    GradedSeries,
    LogStackSolution,
    apply,
    clear_negative_powers,
    formal_series_at_root,
    hypergeometric_polynomials,
)
from hyperwkb.series.pfq import pochhammer
from hyperwkb.variations.operator import (
    PerturbedOperator,
    apply_polynomial,
    inverse_base_apply,
    truncate_at,
)

logger = logging.getLogger(__name__)

MATCH_TOL = 1e-12


def _steps_to(start: Scalar, order: Scalar, lattice: int) -> int:
    return max(math.floor((complex(order) - complex(start)).real * lattice + 1e-9), 0)


def _zero_at(pert: PerturbedOperator, order: Scalar) -> GradedSeries:
    return GradedSeries(pert.variable, pert.lattice, order, (0,))


def _right_side(
    pert: PerturbedOperator, chain: list[GradedSeries], n: int
) -> GradedSeries | None:
    """Σ var^m R u_{n−k} over the perturbations with k ≤ n."""
    rhs: GradedSeries | None = None
    for p in pert.perturbations:
        if p.power <= n < len(chain) + p.power:
            term = apply_polynomial(p.poly, chain[n - p.power]).shift(p.offset)
            rhs = term if rhs is None else rhs + term
    return rhs


def variation_recurrence(
    pert: PerturbedOperator, k_max: int, order: int
) -> list[GradedSeries]:
    """[u_{0,0}, …, u_{0,k_max}], each known for exponents ≤ order.

    u_{0,0} is the base series at the root and base·u_{0,n} = Σ var^m R u_{0,n−k}.
    """
    if k_max < 0:
        raise ParameterError("k_max must be nonnegative", field="k_max")
    pert.check_invertible(order)
    lattice = pert.lattice
    base0, _ = clear_negative_powers(pert.base)
    steps = _steps_to(pert.root, order, base0.lattice)
    chain = [formal_series_at_root(base0, pert.root, steps).regrid(lattice)]
    m0 = pert.lowest_offset
    for n in range(1, k_max + 1):
        rhs = _right_side(pert, chain, n)
        if rhs is None:
            chain.append(_zero_at(pert, order))
            continue
        rhs = truncate_at(rhs, order + m0)
        v = inverse_base_apply(pert.base, rhs, len(rhs.coefficients))
        chain.append(truncate_at(v, order))
        logger.debug(f"variation {n}: leading exponent {chain[-1].leading_exponent}")
    return chain


@dataclass(frozen=True, slots=True)
class PerturbedResidual:
    """Coefficient of ε^n in L(ε)·Σ_{k≤K} ε^k u_{0,k}, one series per n."""

    rows: tuple[GradedSeries, ...]
    k_max: int

    def max_abs(self, upto: int) -> float:
        return max(
            (float(abs(c)) for row in self.rows[: upto + 1] for c in row.coefficients),
            default=0.0,
        )

    def leading_power(self, tol: float = MATCH_TOL) -> int | None:
        """First ε power whose row does not vanish."""
        for n, row in enumerate(self.rows):
            if any(float(abs(c)) > tol for c in row.coefficients):
                return n
        return None


def perturbed_residual(
    pert: PerturbedOperator, chain: list[GradedSeries], order: int
) -> PerturbedResidual:
    """Apply the full perturbed operator to the truncated ε-expansion."""
    k_max = len(chain) - 1
    top = k_max + max((p.power for p in pert.perturbations), default=0)
    rows: list[GradedSeries] = []
    for n in range(top + 1):
        row: GradedSeries | None = None
        if n <= k_max:
            row = apply(pert.base, LogStackSolution.from_series(chain[n])).principal
        rhs = _right_side(pert, chain, n)
        if rhs is not None:
            row = -rhs if row is None else row - rhs
        rows.append(_zero_at(pert, order) if row is None else truncate_at(row, order))
    return PerturbedResidual(tuple(rows), k_max)


def first_mismatch(a: GradedSeries, b: GradedSeries, tol: float = MATCH_TOL) -> Scalar | None:
    """Lowest exponent at which a and b differ, on their common known range."""
    diff = a - b
    for n, c in enumerate(diff.coefficients):
        limit = 0.0 if is_exact(c) else tol
        if float(abs(c)) > limit:
            return diff.exponent(n)
    return None


def variation_formula(pert: PerturbedOperator, k: int, order: int) -> GradedSeries:
    """u_{0,k} from the closed multi-sum Σ Ω(m_k)∏_{j<k}S(m_j)t^{m_k}/m_k!.

    m_j = n₀ + … + n_j + 2j, Ω(n) = ∏(α)_n/∏(β)_n and S(n) = R(n)Q(n+1)/(P(n)P(n+1)).
    """
    if pert.params is None or len(pert.perturbations) != 1:
        raise ParameterError("needs a single perturbation of a pFq operator", field="pert")
    (p,) = pert.perturbations
    if p.power != 1 or p.offset != 2:
        raise ParameterError("needs the ε t² R(𝒟) perturbation shape", field="pert")
    params = pert.params
    q_poly, p_poly = hypergeometric_polynomials(params)

    def s(n: int) -> Scalar:
        denom = p_poly(n) * p_poly(n + 1)
        if denom == 0:
            raise ParameterError(f"P vanishes at {n} or {n + 1}", field="upper")
        return div(p.poly(n) * q_poly(n + 1), denom)

    def omega_over_factorial(m: int) -> Scalar:
        num: Scalar = 1
        den: Scalar = factorial(m)
        for a in params.upper:
            num = num * pochhammer(a, m)
        for b in params.lower:
            den = den * pochhammer(b, m)
        return div(num, den)

    # prefix sums over m_0 < m_1 − 1 < … < m_k − 2k + 1
    acc: list[Scalar] = [1] * (order + 1)
    for _ in range(k):
        nxt: list[Scalar] = [0] * (order + 1)
        running: Scalar = 0
        for m in range(2, order + 1):
            running = running + acc[m - 2] * s(m - 2)
            nxt[m] = running
        acc = nxt
    coeffs = [omega_over_factorial(m) * acc[m] for m in range(order + 1)]
    return GradedSeries.from_coefficients(coeffs, variable=pert.variable)


@dataclass(frozen=True, slots=True)
class FormulaVerdict:
    k: int
    first_mismatch: Scalar | None

    @property
    def agrees(self) -> bool:
        return self.first_mismatch is None


def compare_variation_formula(pert: PerturbedOperator, k: int, order: int) -> FormulaVerdict:
    """Check the closed multi-sum for u_{0,k} against the recurrence."""
    recurrence = variation_recurrence(pert, k, order)[k]
    formula = variation_formula(pert, k, order)
    verdict = FormulaVerdict(k, first_mismatch(formula, recurrence))
    if verdict.agrees:
        logger.info(f"variation formula k={k}: agrees with the recurrence to order {order}")
    else:
        logger.info(f"variation formula k={k}: first mismatch at exponent {verdict.first_mismatch}")
    return verdict
