"""Frobenius bases at a regular singular point, logarithms included."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from hyperwkb.core.errors import (
    IrregularSingularityError,
    LatticeError,
    LogPowerError,
    ResonanceError,
)
from hyperwkb.core.scalars import Scalar, div, is_exact
from hyperwkb.opcore.action import residual_norm
from hyperwkb.opcore.logstack import AlignedStack, LogStackSolution
from hyperwkb.opcore.operator import MellinOperator, clear_negative_powers
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import lattice_offset

logger = logging.getLogger(__name__)

SingularPoint = Literal["0", "1", "inf"]

ROOT_CLUSTER_TOL = 1e-4
MAX_ROOT_DENOMINATOR = 10_000


@dataclass(frozen=True, slots=True)
class IndicialRoot:
    """A root of P₀ with its multiplicity and its place in a resonance class."""

    value: Scalar
    multiplicity: int
    class_id: int
    offset: int  # grid steps above the lowest root of the class


@dataclass(frozen=True, slots=True)
class FrobeniusBasis:
    """Fundamental solutions at one singular point."""

    point: SingularPoint
    operator: MellinOperator
    solutions: tuple[LogStackSolution, ...]
    indicial_roots: tuple[IndicialRoot, ...]

    def __len__(self) -> int:
        return len(self.solutions)

    def __getitem__(self, i: int) -> LogStackSolution:
        return self.solutions[i]

    def residuals(self, order: int | None = None) -> list[float]:
        return [residual_norm(self.operator, s, order) for s in self.solutions]


def _exact_root(poly: EulerPolynomial, approx: complex) -> Fraction | None:
    if abs(approx.imag) > ROOT_CLUSTER_TOL:
        return None
    cand = Fraction(approx.real).limit_denominator(MAX_ROOT_DENOMINATOR)
    return cand if poly(cand) == 0 else None


def _multiplicity(poly: EulerPolynomial, root: Scalar) -> int:
    tay = poly.taylor_at(root)
    k = 0
    while k < len(tay) and tay[k] == 0:
        k += 1
    return k


def _distinct_roots(poly: EulerPolynomial) -> list[tuple[Scalar, int]]:
    """(root, multiplicity) pairs; exact rationals when P₀ is exact and the root is rational."""
    approx = poly.roots()
    exact_poly = all(is_exact(c) for c in poly.coefficients)
    found: list[tuple[Scalar, int]] = []
    used = [False] * len(approx)
    for i, r in enumerate(approx):
        if used[i]:
            continue
        tol = ROOT_CLUSTER_TOL * max(1.0, abs(r))
        cluster = [j for j, s in enumerate(approx) if not used[j] and abs(s - r) < tol]
        for j in cluster:
            used[j] = True
        mean = sum(approx[j] for j in cluster) / len(cluster)
        exact = _exact_root(poly, mean) if exact_poly else None
        if exact is not None:
            root: Scalar = int(exact) if exact.denominator == 1 else exact
            found.append((root, _multiplicity(poly, exact)))
        else:
            value: Scalar = mean.real if abs(mean.imag) < 1e-12 else mean
            found.append((value, len(cluster)))
    return found


def indicial_roots(poly: EulerPolynomial, lattice: int = 1) -> list[IndicialRoot]:
    """Roots of P₀ grouped into classes whose members differ by multiples of 1/L."""
    distinct = _distinct_roots(poly)
    classes: list[list[tuple[Scalar, int]]] = []
    for root, mult in distinct:
        for cls in classes:
            try:
                lattice_offset(cls[0][0], root, lattice)
            except LatticeError:
                continue
            cls.append((root, mult))
            break
        else:
            classes.append([(root, mult)])
    classes.sort(key=lambda c: min((complex(r).real, complex(r).imag) for r, _ in c))
    out: list[IndicialRoot] = []
    for cid, cls in enumerate(classes):
        base = min(cls, key=lambda rm: complex(rm[0]).real)[0]
        for root, mult in sorted(cls, key=lambda rm: complex(rm[0]).real):
            out.append(IndicialRoot(root, mult, cid, lattice_offset(base, root, lattice)))
    return out


def _solve_log_system(
    tay: list[Scalar], rhs: list[Scalar], kernel: int, scale: float
) -> list[Scalar]:
    """Solve Σ_k tay[k]·v_{i+k} = rhs_i with tay[0..kernel-1] = 0, kernel components set to 0."""
    depth = len(rhs)
    v: list[Scalar] = [0] * depth
    lead = tay[kernel]
    for i in range(depth - 1, -1, -1):
        acc = rhs[i]
        for k in range(kernel + 1, len(tay)):
            if i + k < depth and v[i + k] != 0:
                acc = acc - tay[k] * v[i + k]
        if i + kernel >= depth:
            if abs(complex(acc)) > 1e-9 * max(1.0, scale):
                raise ResonanceError("log component outside the image of P₀", order=i)
            continue
        v[i + kernel] = div(acc, lead)
    return v


def _class_solutions(
    op: MellinOperator, roots: list[IndicialRoot], order: int
) -> list[LogStackSolution]:
    lattice = op.lattice
    p0 = op.indicial_polynomial()
    base = roots[0].value
    depth = sum(r.multiplicity for r in roots)
    if depth > max(op.order, 1):
        raise LogPowerError(f"class needs {depth - 1} log powers, operator order is {op.order}")
    at_offset = {r.offset: r for r in roots}
    n_max = order + max(r.offset for r in roots)
    higher = [(lattice_offset(0, m, lattice), p) for m, p in op.terms[1:]]
    # x[n][p] is the log vector (length depth) of parameter column p at grid point n
    x: list[list[list[Scalar]]] = []
    columns = 0
    for n in range(n_max + 1):
        a = base + Fraction(n, lattice)
        root = at_offset.get(n)
        kernel = root.multiplicity if root is not None else 0
        tay = p0.taylor_at(a)
        for k in range(kernel):
            tay[k] = 0
        col_vecs: list[list[Scalar]] = []
        for p in range(columns):
            rhs: list[Scalar] = [0] * depth
            for step, poly in higher:
                if step > n or p >= len(x[n - step]):
                    continue
                prev = x[n - step][p]
                if all(c == 0 for c in prev):
                    continue
                act = poly.act_on_logs(a - Fraction(step, lattice), prev)
                rhs = [r - w for r, w in zip(rhs, act, strict=True)]
            scale = max((float(abs(c)) for c in rhs), default=0.0)
            col_vecs.append(_solve_log_system(tay, rhs, kernel, scale))
        for k in range(kernel):
            vec: list[Scalar] = [0] * depth
            vec[k] = 1
            col_vecs.append(vec)
        columns += kernel
        x.append(col_vecs)
    solutions = []
    for p in range(columns):
        rows = tuple(
            tuple(x[n][p][j] if p < len(x[n]) else 0 for n in range(n_max + 1))
            for j in range(depth)
        )
        grid = AlignedStack(op.variable, lattice, base, rows)
        sol = LogStackSolution.from_aligned(grid)
        solutions.append(
            LogStackSolution(tuple((j, s.normalized()) for j, s in sol.branches))
        )
    return solutions


def frobenius_at_zero(
    op: MellinOperator, order: int, *, point: SingularPoint = "0"
) -> FrobeniusBasis:
    """Fundamental solutions near var = 0 of a regular singular operator.

    Roots in one class share a grid. Each root of multiplicity r contributes r new
    parameters, realized as the log components e_0..e_{r-1} at its grid point; the
    resulting log stacks are the slices of the μ-deformed series t^{γ+μ}(…) in μ⁰..μ^{r−1}.
    """
    op, _ = clear_negative_powers(op)
    p0 = op.indicial_polynomial()
    if p0.degree < op.order:
        raise IrregularSingularityError(
            f"deg P₀ = {p0.degree} < order {op.order}: var = 0 is irregular, use the wkb module"
        )
    roots = indicial_roots(p0, op.lattice)
    solutions: list[LogStackSolution] = []
    for cid in sorted({r.class_id for r in roots}):
        members = [r for r in roots if r.class_id == cid]
        solutions.extend(_class_solutions(op, members, order))
    logger.debug(
        f"frobenius_at_zero: {len(solutions)} solutions, roots "
        f"{[(r.value, r.multiplicity) for r in roots]}"
    )
    return FrobeniusBasis(point, op, tuple(solutions), tuple(roots))
