"""Operator application, residuals and single-root formal series."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from hyperwkb.core.errors import LatticeError, ResonanceError
from hyperwkb.core.scalars import Scalar, div
from hyperwkb.opcore.logstack import AlignedStack, LogStackSolution
from hyperwkb.opcore.operator import MellinOperator
from hyperwkb.opcore.series import GradedSeries, lattice_offset


def apply(op: MellinOperator, sol: LogStackSolution) -> LogStackSolution:
    """op·sol, exact below the input cutoff raised by the lowest offset."""
    if op.variable != sol.variable:
        raise LatticeError(f"operator acts on {op.variable}, solution is in {sol.variable}")
    grid = sol.aligned()
    lattice = grid.lattice
    if lattice % op.lattice:
        lattice = lcm(lattice, op.lattice)
        grid = _regrid(grid, lattice)
    if op.is_zero():
        zero = GradedSeries.zero(grid.length - 1, variable=grid.variable, lattice=lattice,
                                 leading_exponent=grid.leading_exponent)
        return LogStackSolution.from_series(zero)
    m_min = op.terms[0][0]
    length = grid.length
    depth = len(grid.rows)
    out: list[list[Scalar]] = [[0] * length for _ in range(depth)]
    for m, poly in op.terms:
        step = lattice_offset(m_min, m, lattice)
        for n in range(length - step):
            vec = [row[n] for row in grid.rows]
            if all(v == 0 for v in vec):
                continue
            a = grid.leading_exponent + Fraction(n, lattice)
            for j, w in enumerate(poly.act_on_logs(a, vec)):
                if w != 0:
                    out[j][n + step] = out[j][n + step] + w
    return LogStackSolution.from_aligned(
        AlignedStack(grid.variable, lattice, grid.leading_exponent + m_min, tuple(map(tuple, out)))
    )


def _regrid(grid: AlignedStack, lattice: int) -> AlignedStack:
    rows = tuple(
        GradedSeries(grid.variable, grid.lattice, grid.leading_exponent, r)
        .regrid(lattice)
        .coefficients
        for r in grid.rows
    )
    return AlignedStack(grid.variable, lattice, grid.leading_exponent, rows)


def residual_norm(op: MellinOperator, sol: LogStackSolution, order: int | None = None) -> float:
    """Largest |coefficient| of op·sol among the first order+1 reliable grid points."""
    grid = apply(op, sol).aligned()
    limit = grid.length if order is None else min(grid.length, order + 1)
    worst = 0.0
    for row in grid.rows:
        for c in row[:limit]:
            worst = max(worst, float(abs(c)))
    return worst


def formal_series_at_root(op: MellinOperator, root: Scalar, order: int) -> GradedSeries:
    """Log-free series var^root(1 + …) annihilated by op, via the triangular recurrence.

    P₀(root + n/L)c_n = −Σ_{m>0} P_m(root + n/L − m) c_{n−mL}; a vanishing P₀ at n > 0
    raises ResonanceError.
    """
    if op.is_zero() or op.terms[0][0] != 0:
        raise LatticeError("operator must have its lowest offset at 0")
    lattice = op.lattice
    p0 = op.indicial_polynomial()
    higher = [(lattice_offset(0, m, lattice), p) for m, p in op.terms[1:]]
    coeffs: list[Scalar] = [1]
    for n in range(1, order + 1):
        a = root + Fraction(n, lattice)
        rhs: Scalar = 0
        for step, p in higher:
            if step <= n:
                c = coeffs[n - step]
                if c != 0:
                    rhs = rhs - p(a - Fraction(step, lattice)) * c
        denom = p0(a)
        if abs(complex(denom)) < 1e-13:
            if abs(complex(rhs)) < 1e-13:
                coeffs.append(0)
                continue
            raise ResonanceError(f"indicial polynomial vanishes at exponent {a}", order=n)
        coeffs.append(div(rhs, denom))
    return GradedSeries(op.variable, lattice, root, tuple(coeffs))
