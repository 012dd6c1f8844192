"""Multiple polylogarithms and multiple zeta values by nested summation."""

from __future__ import annotations

import logging
import math
import threading

import numpy as np
import scipy.special as sc

from hyperwkb.core.errors import ConvergenceError, DivergenceError, ParameterError
from hyperwkb.series.params import MZVIndex

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
RICHARDSON_BASE = 64
MAX_TERMS = 2**22

_cache: dict[tuple[tuple[int, ...], float], float] = {}
_cache_lock = threading.Lock()


def _nested_terms(exponents: tuple[int, ...], n_max: int, t: float = 1.0) -> np.ndarray:
    """Array of t^n/n^{d_k}·(inner nested sum over n₁<…<n_{k−1}<n) for n = 1..n_max."""
    n = np.arange(1, n_max + 1, dtype=np.float64)
    level = n ** (-float(exponents[0]))
    for d in exponents[1:]:
        inner = np.concatenate(([0.0], np.cumsum(level)[:-1]))
        level = inner * n ** (-float(d))
    if t != 1.0:
        level = level * np.power(t, n)
    return level


def _inner_bound(exponents: tuple[int, ...], n_max: int) -> float:
    """Upper bound for the inner nested sum at any n, from partial sums at n_max."""
    bound = 1.0
    for d in exponents[:-1]:
        bound *= float(sc.zeta(d, 1)) if d >= 2 else 1.0 + math.log(2.0 * n_max)
    return bound


def multi_polylog(index: MZVIndex, t: float, tol: float = DEFAULT_TOL) -> float:
    """Li_{d₁..d_k}(t) = Σ_{0<n₁<…<n_k} t^{n_k}/∏ n_j^{d_j} for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise ParameterError(f"multi_polylog needs t in [0, 1], got {t}", field="t")
    if t == 1.0:
        return mzv(index, tol)
    if t == 0.0:
        return 0.0
    exps = index.exponents
    d_last = exps[-1]
    n_max = max(32, len(exps) + 1)
    while True:
        inner = _inner_bound(exps, 2 * n_max)
        tail = inner * t ** (n_max + 1) / ((n_max + 1) ** d_last * (1.0 - t))
        if tail <= tol:
            break
        if n_max > MAX_TERMS:
            raise ConvergenceError(f"Li{index}({t}) tail {tail:.3e} above tol", last_ratio=t)
        n_max *= 2
    value = math.fsum(_nested_terms(exps, n_max, t))
    logger.debug(f"Li{index}({t}) with {n_max} terms, tail bound {tail:.2e}")
    return value


def _richardson(exponents: tuple[int, ...], tol: float) -> tuple[float, float]:
    """Extrapolate S_N, N = N₀·2^m, assuming S − S_N expands in N^{−(d_k−1)}, N^{−d_k}, …."""
    first_power = exponents[-1] - 1
    levels = 6
    while True:
        n_max = RICHARDSON_BASE * 2 ** (levels - 1)
        partial = np.cumsum(_nested_terms(exponents, n_max))
        table: list[list[float]] = []
        for m in range(levels):
            row = [float(partial[RICHARDSON_BASE * 2**m - 1])]
            for j, prev in enumerate(table[-1] if table else []):
                factor = 2.0 ** (first_power + j)
                row.append((factor * row[j] - prev) / (factor - 1.0))
            table.append(row)
        best = table[-1][-1]
        est = abs(best - table[-2][-1])
        if est <= tol or n_max >= MAX_TERMS:
            return best, est
        levels += 2


def _direct(exponents: tuple[int, ...], tol: float) -> tuple[float, float]:
    d_last = exponents[-1]
    n_max = 1024
    while True:
        terms = _nested_terms(exponents, n_max)
        inner = _inner_bound(exponents, n_max)
        tail = inner / ((d_last - 1) * n_max ** (d_last - 1))
        if tail <= tol or n_max >= MAX_TERMS:
            return math.fsum(terms), tail
        n_max *= 4


def mzv(index: MZVIndex, tol: float = DEFAULT_TOL) -> float:
    """ζ(d₁,…,d_k) for d_k ≥ 2, memoized per (index, tol)."""
    exps = index.exponents
    if not index.admissible:
        raise DivergenceError(f"ζ{index} diverges: the last exponent must be at least 2")
    key = (exps, tol)
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    if len(exps) == 1:
        value, est = float(sc.zeta(exps[0], 1)), 0.0
    elif all(d >= 2 for d in exps):
        value, est = _richardson(exps, tol)
    else:
        value, est = _direct(exps, tol)
    if est > tol:
        raise ConvergenceError(f"ζ{index}: error estimate {est:.3e} above tol {tol:.1e}",
                               last_ratio=est)
    with _cache_lock:
        _cache.setdefault(key, value)
    logger.debug(f"ζ{index} = {value!r} (est {est:.2e})")
    return value


def mzv_repeated(d: int, k: int) -> float:
    """ζ(d,…,d) with k copies, from Newton's identities on the power sums ζ(d·i)."""
    if d < 2:
        raise DivergenceError("repeated MZVs need d >= 2")
    if k < 0:
        raise ParameterError("depth must be nonnegative", field="k")
    power_sums = [0.0] + [float(sc.zeta(d * i, 1)) for i in range(1, k + 1)]
    e = [1.0]
    for m in range(1, k + 1):
        acc = 0.0
        for i in range(1, m + 1):
            acc += (-1) ** (i - 1) * e[m - i] * power_sums[i]
        e.append(acc / m)
    return e[k]


def clear_mzv_cache() -> None:
    with _cache_lock:
        _cache.clear()
