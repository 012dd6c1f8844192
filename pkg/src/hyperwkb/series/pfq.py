"""Direct summation of generalized hypergeometric series."""

from __future__ import annotations

import logging
import math
from typing import NamedTuple

from hyperwkb.core.errors import ConvergenceError, DivergenceError
from hyperwkb.core.scalars import Scalar, div, is_exact
from hyperwkb.opcore.series import GradedSeries, Variable
from hyperwkb.series.params import HyperParams

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-14
DEFAULT_MAX_TERMS = 100_000
RICHARDSON_BASE = 64
RICHARDSON_MAX_LEVELS = 12


class PfqValue(NamedTuple):
    value: Scalar
    est_error: float


def pochhammer(a: Scalar, n: int) -> Scalar:
    """(a)_n = a(a+1)…(a+n−1); (a)_0 = 1."""
    out: Scalar = 1
    for i in range(n):
        out = out * (a + i)
    return out


def term_ratio(params: HyperParams, n: int) -> Scalar:
    """a_{n+1}/a_n without the factor t: ∏(α+n)/(∏(β+n)·(n+1))."""
    num: Scalar = 1
    for a in params.upper:
        num = num * (a + n)
    den: Scalar = n + 1
    for b in params.lower:
        den = den * (b + n)
    return div(num, den)


def pfq_series(
    params: HyperParams, order: int, *, formal: bool = False, variable: Variable = "t"
) -> GradedSeries:
    """Taylor coefficients a_0..a_order, from Q(n+1)a_{n+1} = P(n)a_n with a_0 = 1."""
    if params.kind == "divergent" and not formal:
        raise DivergenceError(f"{params} diverges for t ≠ 0; pass formal=True for coefficients")
    coeffs: list[Scalar] = [1]
    for n in range(order):
        coeffs.append(coeffs[-1] * term_ratio(params, n))
    return GradedSeries(variable, 1, 0, tuple(coeffs))


def _check_domain(params: HyperParams, t: Scalar) -> None:
    kind = params.kind
    if kind == "divergent":
        raise DivergenceError(f"{params} has zero radius of convergence")
    if kind == "balanced":
        r = abs(complex(t))
        if r > 1.0:
            raise DivergenceError(f"{params} diverges at |t| = {r} > 1")
        if r == 1.0 and complex(t) != 1:
            raise DivergenceError(f"{params}: only t = 1 is supported on the unit circle")
        if r == 1.0 and params.excess.real <= 0.0:
            raise DivergenceError(
                f"{params} diverges on |t| = 1 since Re(Σβ − Σα) = {params.excess.real} <= 0"
            )


def _polynomial_sum(params: HyperParams, t: Scalar) -> PfqValue:
    degree = params.terminating_degree
    assert degree is not None
    exact = is_exact(t) and all(is_exact(x) for x in (*params.upper, *params.lower))
    term: Scalar = 1
    total: Scalar = 1
    mags = 1.0
    for n in range(degree):
        term = term * term_ratio(params, n) * t
        total = total + term
        mags += float(abs(term))
    if exact:
        return PfqValue(total, 0.0)
    return PfqValue(complex(total), 2.2e-16 * mags * (degree + 1))


def _geometric_sum(params: HyperParams, t: complex, tol: float, max_terms: int) -> PfqValue:
    limit_ratio = abs(t) if params.kind == "balanced" else 0.0
    scale = max((abs(complex(x)) for x in (*params.upper, *params.lower)), default=0.0)
    settle = int(2 * scale) + 2
    term = 1 + 0j
    total = 1 + 0j
    ratio = 0.0
    for n in range(max_terms):
        step = complex(term_ratio(params, n)) * t
        term = term * step
        total += term
        ratio = abs(step)
        if n < settle:
            continue
        bound_ratio = max(ratio, limit_ratio)
        if bound_ratio >= 1.0:
            continue
        nxt = abs(term) * abs(complex(term_ratio(params, n + 1)) * t)
        est = nxt / (1.0 - bound_ratio)
        if est <= tol:
            logger.debug(f"pfq_eval {params} at t={t}: {n + 1} terms, est {est:.3e}")
            return PfqValue(total, est)
    raise ConvergenceError(
        f"{params} at t={t} did not converge in {max_terms} terms", last_ratio=ratio
    )


def _unit_circle_sum(params: HyperParams, t: complex, tol: float, max_terms: int) -> PfqValue:
    """Richardson extrapolation of partial sums S_N, N = N₀·2^m.

    The tail S − S_N expands in N^{−s}, N^{−s−1}, … with s = Σβ − Σα.
    """
    s = params.excess
    scale = max((abs(complex(x)) for x in (*params.upper, *params.lower)), default=0.0)
    n0 = max(RICHARDSON_BASE, int(4 * scale))
    table: list[list[complex]] = []
    term = 1 + 0j
    total = 1 + 0j
    n = 0
    est = math.inf
    for level in range(RICHARDSON_MAX_LEVELS):
        target = n0 * 2**level
        if target > max_terms:
            break
        while n < target:
            term = term * complex(term_ratio(params, n)) * t
            total += term
            n += 1
        row = [total]
        for j, prev in enumerate(table[-1] if table else []):
            factor = 2.0 ** (s + j)
            row.append((factor * row[j] - prev) / (factor - 1.0))
        table.append(row)
        if level >= 2:
            est = abs(row[-1] - table[-2][-1])
            if est <= tol:
                logger.debug(f"pfq_eval {params} at |t|=1: {n} terms, {level} Richardson levels")
                return PfqValue(row[-1], est)
    raise ConvergenceError(
        f"{params} at t={t}: Richardson estimate {est:.3e} above tolerance", last_ratio=est
    )


def pfq_eval(
    params: HyperParams,
    t: Scalar,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> PfqValue:
    """Sum pFq(α; β; t); the returned tail estimate est_error is at most tol."""
    if params.kind == "polynomial":
        return _polynomial_sum(params, t)
    _check_domain(params, t)
    tc = complex(t)
    if tc == 0:
        return PfqValue(1 + 0j, 0.0)
    if params.kind == "balanced" and abs(tc) == 1.0:
        return _unit_circle_sum(params, tc, tol, max_terms)
    return _geometric_sum(params, tc, tol, max_terms)
