"""Solutions of {(1−t)𝒟³ + λ³t}u = 0 as power series in λ³ and their polylogarithm forms.

With u_j = Σ_k (−λ³)^k u_{j,k} and L = ln(λ³t):

    u_{0,k} = f_k,  u_{1,k} = f_k·L + g_k,  u_{2,k} = ½f_k·L² + g_k·L + h_k,

where 𝒟³f_k = t/(1−t)·f_{k−1}, 𝒟³g_k = t/(1−t)·g_{k−1} − 3𝒟²f_k and
𝒟³h_k = t/(1−t)·h_{k−1} − 3𝒟f_k − 3𝒟²g_k, starting from f₀ = 1, g₀ = h₀ = 0.
"""

from __future__ import annotations

import cmath
import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.mzvgen.genfun import delta3
from hyperwkb.opcore import EulerPolynomial, GradedSeries, MellinOperator
from hyperwkb.series.mzv import multi_polylog, mzv, mzv_repeated
from hyperwkb.series.params import MZVIndex
from hyperwkb.special.gamma import zeta
from hyperwkb.variations.operator import inverse_base_apply

logger = logging.getLogger(__name__)

DEFAULT_CHAIN_ORDER = 60
PRINTED_U2_LOG = {1: 3, 2: 9}

Word = tuple[int, ...]


def _on_grid(series: GradedSeries, order: int) -> GradedSeries:
    return GradedSeries("t", 1, 0, series.rebase(0, order + 1))


@dataclass(frozen=True, slots=True)
class ThirdOrderChain:
    """Log-free parts (f_k, g_k, h_k) for k = 0..k_max, exact through t^order."""

    order: int
    rows: tuple[tuple[GradedSeries, GradedSeries, GradedSeries], ...]

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1

    def values(self, k: int, t: float, lam: Scalar = 1) -> tuple[complex, complex, complex]:
        """(u_{0,k}(t), u_{1,k}(t), u_{2,k}(t))."""
        f, g, h = (s.evaluate(t) for s in self.rows[k])
        big_l = cmath.log(complex(lam) ** 3 * t)
        return f, f * big_l + g, 0.5 * f * big_l**2 + g * big_l + h


@lru_cache(maxsize=16)
def third_order_chain(k_max: int, order: int = DEFAULT_CHAIN_ORDER) -> ThirdOrderChain:
    """Solve the chain by inverting 𝒟³ term by term on exact rational series."""
    if k_max < 0:
        raise ParameterError("k_max must be nonnegative", field="k_max")
    d3 = MellinOperator.polynomial(EulerPolynomial((0, 0, 0, 1)))
    geometric = GradedSeries("t", 1, 0, (Fraction(0),) + (Fraction(1),) * order)
    zero = GradedSeries.zero(order)
    rows = [(_on_grid(GradedSeries.monomial(0, 0, coefficient=Fraction(1)), order), zero, zero)]

    def invert(rhs: GradedSeries) -> GradedSeries:
        if rhs.is_zero():
            return zero
        return _on_grid(inverse_base_apply(d3, rhs, order), order)

    for _ in range(k_max):
        f0, g0, h0 = rows[-1]
        f = invert(geometric * f0)
        df = f.euler_derivative()
        g = invert(geometric * g0 - df.euler_derivative().scale(3))
        h = invert(geometric * h0 - df.scale(3) - g.euler_derivative().euler_derivative().scale(3))
        rows.append((f, g, h))
    logger.debug(f"third_order_chain: k_max={k_max}, order={order}")
    return ThirdOrderChain(order, tuple(rows))


def words_with(k: int, letters: dict[int, int]) -> list[Word]:
    """Words of length k over {3} ∪ letters with letters[d] copies of each d, the rest 3's."""
    extra = sum(letters.values())
    if extra > k:
        return []
    words: set[Word] = set()
    fillers = [d for d, count in letters.items() for _ in range(count)]
    for slots in itertools.permutations(range(k), extra):
        word = [3] * k
        for pos, d in zip(slots, fillers, strict=True):
            word[pos] = d
        words.add(tuple(word))
    return sorted(words)


def _li_sum(words: Sequence[Word], t: float) -> float:
    return math.fsum(multi_polylog(MZVIndex(exponents=w), t) for w in words)


def _zeta_sum(words: Sequence[Word]) -> float:
    return math.fsum(mzv(MZVIndex(exponents=w)) for w in words)


def polylog_forms(k: int, t: float) -> tuple[float, float, float, float]:
    """(u_{0,k}, ũ_{1,k}, ũ_{2,k}, printed ũ_{2,k}) as sums of multiple polylogarithms.

    ũ_{1,k} = −3·Σ(one 4) and ũ_{2,k} = 6·Σ(one 5) + 9·Σ(two 4's); the printed ũ_{2,k}
    keeps only the one-5 words.
    """
    if k == 0:
        return 1.0, 0.0, 0.0, 0.0
    u0 = multi_polylog(MZVIndex(exponents=(3,) * k), t)
    u1 = -3 * _li_sum(words_with(k, {4: 1}), t)
    fives = 6 * _li_sum(words_with(k, {5: 1}), t)
    fours = 9 * _li_sum(words_with(k, {4: 2}), t)
    return u0, u1, fives + fours, fives


@dataclass(frozen=True, slots=True)
class Lemma53Report:
    """Gaps between the chain solution and the polylogarithm forms at one (k, t, λ)."""

    k: int
    t: float
    lam: complex
    u0_gap: float
    u1_gap: float
    u2_gap: float
    printed_u2_gap: float

    @property
    def max_deviation(self) -> float:
        return max(self.u0_gap, self.u1_gap, self.u2_gap)


def lemma53_check(
    k: int, t: float, lam: Scalar = 1, order: int = DEFAULT_CHAIN_ORDER
) -> Lemma53Report:
    if k < 0:
        raise ParameterError("k must be nonnegative", field="k")
    if not 0.0 < t <= 1.0:
        raise ParameterError(f"t must lie in (0, 1], got {t}", field="t")
    chain = third_order_chain(k, order)
    u0, u1, u2 = chain.values(k, t, lam)
    p0, p1, p2, p2_printed = polylog_forms(k, t)
    big_l = cmath.log(complex(lam) ** 3 * t)
    ref1 = p0 * big_l + p1
    ref2 = 0.5 * p0 * big_l**2 + p1 * big_l
    report = Lemma53Report(
        k=k,
        t=t,
        lam=complex(lam),
        u0_gap=abs(u0 - p0),
        u1_gap=abs(u1 - ref1),
        u2_gap=abs(u2 - ref2 - p2),
        printed_u2_gap=abs(u2 - ref2 - p2_printed),
    )
    logger.debug(f"lemma53_check(k={k}, t={t}): max deviation {report.max_deviation:.2e}")
    return report


@dataclass(frozen=True, slots=True)
class AtOneRow:
    """Coefficient of λ^{3k} in the non-log part of u₁(1; λ), by MZVs and by the Δ₃ product."""

    k: int
    from_mzv: float
    from_product: float

    @property
    def gap(self) -> float:
        return abs(self.from_mzv - self.from_product)


@dataclass(frozen=True, slots=True)
class AtOneReport:
    lam: complex
    rows: tuple[AtOneRow, ...]
    u0_series: complex
    u0_gamma: complex
    u1_series: complex
    u1_product: complex

    @property
    def max_coefficient_gap(self) -> float:
        return max(row.gap for row in self.rows)

    @property
    def u0_gap(self) -> float:
        return abs(self.u0_series - self.u0_gamma)

    @property
    def u1_gap(self) -> float:
        return abs(self.u1_series - self.u1_product)


def lemma53_at_one(lam: Scalar, k_max: int = 3) -> AtOneReport:
    """Rows of u₀(1; λ) and u₁(1; λ) as λ³-series truncated after λ^{3·k_max}.

    u₁(1; λ) = Σ_k (−λ³)^k [3ζ({3}^k)·ln λ − 3Σζ(one 4)] should equal
    3Δ₃(λ){ln λ + Σ_m ζ(3m+1)λ^{3m}} coefficient by coefficient.
    """
    if k_max < 1:
        raise ParameterError("k_max must be at least 1", field="k_max")
    lc = complex(lam)
    if lc == 0:
        raise ParameterError("u₁(1; λ) has a logarithmic singularity at λ = 0", field="lam")
    x = lc**3
    deltas = [(-1) ** k * mzv(MZVIndex(exponents=(3,) * k)) if k else 1.0 for k in range(k_max + 1)]
    odd = [0.0] + [zeta(3 * m + 1) for m in range(1, k_max + 1)]
    rows: list[AtOneRow] = []
    for k in range(1, k_max + 1):
        from_mzv = (-1) ** (k + 1) * 3 * _zeta_sum(words_with(k, {4: 1}))
        from_product = 3 * math.fsum(deltas[k - m] * odd[m] for m in range(1, k + 1))
        rows.append(AtOneRow(k, from_mzv, from_product))
    log_lam = cmath.log(lc)
    u0_series = sum((c * x**k for k, c in enumerate(deltas)), 0j)
    u1_series = 3 * log_lam * u0_series + sum((r.from_mzv * x**r.k for r in rows), 0j)
    bracket = log_lam + sum((odd[m] * x**m for m in range(1, k_max + 1)), 0j)
    u1_product = 3 * u0_series * bracket
    report = AtOneReport(lc, tuple(rows), u0_series, delta3(lc), u1_series, u1_product)
    logger.debug(f"lemma53_at_one({lc}): coefficient gap {report.max_coefficient_gap:.2e}")
    return report


@dataclass(frozen=True, slots=True)
class U2RowEntry:
    """Coefficient of λ^{3k} in u₂(1; λ)/Δ₃(λ), split by the power of ln λ³.

    The printed log coefficients are known only through the displayed terms (None beyond).
    """

    k: int
    log_derived: float
    log_printed: float | None
    const_from_mzv: float
    const_derived: float
    const_printed: float

    @property
    def log_agrees(self) -> bool | None:
        if self.log_printed is None:
            return None
        return math.isclose(self.log_derived, self.log_printed, rel_tol=1e-9)

    @property
    def const_agrees(self) -> bool:
        return math.isclose(self.const_from_mzv, self.const_printed, rel_tol=1e-9, abs_tol=1e-12)


@dataclass(frozen=True, slots=True)
class U2RowReport:
    entries: tuple[U2RowEntry, ...]

    @property
    def first_log_mismatch(self) -> int | None:
        return next((e.k for e in self.entries if e.log_agrees is False), None)

    @property
    def first_const_mismatch(self) -> int | None:
        return next((e.k for e in self.entries if not e.const_agrees), None)

    @property
    def max_derived_gap(self) -> float:
        return max(abs(e.const_from_mzv - e.const_derived) for e in self.entries)


def lemma53_u2_row_report(k_max: int = 3) -> U2RowReport:
    """u₂(1; λ)/Δ₃ = ½ln²λ³ + ln λ³·Σ a_k λ^{3k} + Σ b_k λ^{3k}.

    Derived: a_k = 3ζ(3k+1), b_k = −6ζ(3k+2) + (9/2)[x^{k−2}](p₁² − p₂) with
    p₁ = Σ_m ζ(3m+4)x^m and p₂ = Σ_m (m+1)ζ(3m+8)x^m. Printed: a = (3ζ(4), 9ζ(7), …) and
    b_k = −6ζ(3k+2). The MZV column divides Σ_k (−x)^k ũ_{2,k}(1) by the Δ₃ series.
    """
    if k_max < 1:
        raise ParameterError("k_max must be at least 1", field="k_max")
    deltas = [(-1) ** k * mzv_repeated(3, k) for k in range(k_max + 1)]
    raw = [0.0] + [
        (-1) ** k
        * (6 * _zeta_sum(words_with(k, {5: 1})) + 9 * _zeta_sum(words_with(k, {4: 2})))
        for k in range(1, k_max + 1)
    ]
    quotient: list[float] = []
    for k in range(k_max + 1):
        acc = raw[k] - math.fsum(deltas[k - j] * quotient[j] for j in range(k))
        quotient.append(acc / deltas[0])
    p1 = [zeta(3 * m + 4) for m in range(k_max)]
    p2 = [(m + 1) * zeta(3 * m + 8) for m in range(k_max)]
    entries: list[U2RowEntry] = []
    for k in range(1, k_max + 1):
        pair = 0.0
        if k >= 2:
            n = k - 2
            pair = 4.5 * (math.fsum(p1[i] * p1[n - i] for i in range(n + 1)) - p2[n])
        printed = PRINTED_U2_LOG.get(k)
        entries.append(
            U2RowEntry(
                k=k,
                log_derived=3 * zeta(3 * k + 1),
                log_printed=None if printed is None else printed * zeta(3 * k + 1),
                const_from_mzv=quotient[k],
                const_derived=-6 * zeta(3 * k + 2) + pair,
                const_printed=-6 * zeta(3 * k + 2),
            )
        )
    report = U2RowReport(tuple(entries))
    logger.debug(
        f"lemma53_u2_row_report: log mismatch at {report.first_log_mismatch}, "
        f"constant mismatch at {report.first_const_mismatch}"
    )
    return report
