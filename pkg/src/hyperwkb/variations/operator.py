"""Perturbed hypergeometric operators and the inverse of the unperturbed part."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from hyperwkb.core.errors import ParameterError, ResonanceError
from hyperwkb.core.scalars import Scalar, div, is_exact
from hyperwkb.opcore import (
    EulerPolynomial,
    GradedSeries,
    MellinOperator,
    Variable,
    build_hypergeometric_operator,
    lattice_offset,
)
from hyperwkb.series.params import HyperParams

logger = logging.getLogger(__name__)

VANISH_TOL = 1e-13


def _vanishes(x: Scalar) -> bool:
    if is_exact(x):
        return x == 0
    return abs(complex(x)) < VANISH_TOL


def apply_polynomial(poly: EulerPolynomial, series: GradedSeries) -> GradedSeries:
    """R(𝒟) acting on a log-free series: c_n ↦ R(γ + n/L)c_n."""
    return GradedSeries(
        series.variable,
        series.lattice,
        series.leading_exponent,
        tuple(c * poly(series.exponent(n)) for n, c in enumerate(series.coefficients)),
    )


def truncate_at(series: GradedSeries, order: Scalar) -> GradedSeries:
    """Keep the terms with exponent ≤ order; an empty result is a zero term at var^order."""
    span = (complex(order) - complex(series.leading_exponent)).real * series.lattice
    keep = math.floor(span + 1e-9) + 1
    if keep <= 0:
        return GradedSeries(series.variable, series.lattice, order, (0,))
    return series.truncate(keep - 1)


@dataclass(frozen=True, slots=True)
class Perturbation:
    """ε^power·var^offset·R(𝒟), moved to the right-hand side of base·u = …."""

    power: int
    offset: Fraction
    poly: EulerPolynomial

    def __post_init__(self) -> None:
        if self.power < 1:
            raise ParameterError("perturbation power must be at least 1", field="power")
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.offset <= 0:
            raise ParameterError("perturbation offset must be positive", field="offset")


@dataclass(frozen=True, slots=True)
class PerturbedOperator:
    """base − Σ ε^k var^m R(𝒟).

    The unperturbed solution is the log-free base series at `root`; `params` is set when
    the base is the hypergeometric operator Q − tP of those parameters.
    """

    base: MellinOperator
    perturbations: tuple[Perturbation, ...]
    root: Scalar = 0
    params: HyperParams | None = None

    def __post_init__(self) -> None:
        if self.base.is_zero():
            raise ParameterError("the unperturbed operator is zero", field="base")

    @classmethod
    def hypergeometric(
        cls, params: HyperParams, poly: EulerPolynomial, offset: int = 2
    ) -> PerturbedOperator:
        """(Q − tP − ε t^offset R)u = 0 around pFq(α; β; t)."""
        return cls(
            build_hypergeometric_operator(params),
            (Perturbation(1, Fraction(offset), poly),),
            0,
            params,
        )

    @property
    def variable(self) -> Variable:
        return self.base.variable

    @property
    def lowest_offset(self) -> Fraction:
        return self.base.terms[0][0]

    @property
    def lattice(self) -> int:
        """Common lattice of the base operator and every perturbation offset."""
        return lcm(self.base.lattice, *(p.offset.denominator for p in self.perturbations))

    def check_invertible(self, order: int) -> None:
        """Raise ResonanceError if Q vanishes on a lattice point a variation can reach."""
        if not self.perturbations:
            return
        q = self.base.indicial_polynomial()
        lattice = self.lattice
        start = self.root + min(p.offset for p in self.perturbations) - self.lowest_offset
        span = (complex(order) - complex(start)).real * lattice
        for n in range(max(math.floor(span + 1e-9) + 1, 0)):
            e = start + Fraction(n, lattice)
            if _vanishes(q(e)):
                raise ResonanceError(f"Q vanishes at the reachable exponent {e}", order=n)


def inverse_base_apply(base: MellinOperator, series: GradedSeries, order: int) -> GradedSeries:
    """v with base·v = series, coefficient by coefficient on the lattice of series.

    With base = Σ var^m P_m(𝒟), lowest offset m₀ and Q = P_{m₀}:
    Q(e)v_e = f_{e+m₀} − Σ_{m>m₀} P_m(e + m₀ − m)v_{e+m₀−m}. At most order+1 lattice
    points are computed. A vanishing Q with vanishing right-hand side leaves v_e = 0.
    """
    if base.is_zero():
        raise ParameterError("cannot invert the zero operator", field="base")
    lattice = lcm(series.lattice, base.lattice)
    f = series.regrid(lattice)
    m0, q = base.terms[0]
    higher = [(lattice_offset(m0, m, lattice), p) for m, p in base.terms[1:]]
    lead = f.leading_exponent - m0
    out: list[Scalar] = []
    for n in range(min(len(f.coefficients), order + 1)):
        e = lead + Fraction(n, lattice)
        num = f.coefficients[n]
        for step, p in higher:
            if step <= n and out[n - step] != 0:
                num = num - p(e - Fraction(step, lattice)) * out[n - step]
        denom = q(e)
        if _vanishes(denom):
            if _vanishes(num):
                out.append(0)
                continue
            raise ResonanceError(f"Q vanishes at exponent {e} with a nonzero right side", order=n)
        out.append(div(num, denom))
    return GradedSeries(f.variable, lattice, lead, tuple(out)).normalized()
