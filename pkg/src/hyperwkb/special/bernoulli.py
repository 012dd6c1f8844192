"""Bernoulli numbers as exact rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb

from hyperwkb.core.errors import ParameterError

MAX_BERNOULLI_INDEX = 40


@cache
def _table() -> tuple[Fraction, ...]:
    # Σ_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, B_0 = 1.
    b = [Fraction(1)]
    for m in range(1, MAX_BERNOULLI_INDEX + 1):
        s = sum((comb(m + 1, k) * b[k] for k in range(m)), Fraction(0))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli(index: int) -> Fraction:
    """B_index for even index in [0, 40] (B_1 = -1/2 also served)."""
    if index < 0 or index > MAX_BERNOULLI_INDEX:
        raise ParameterError(
            f"Bernoulli index must lie in [0, {MAX_BERNOULLI_INDEX}], got {index}", field="index"
        )
    if index > 1 and index % 2 == 1:
        return Fraction(0)
    return _table()[index]
