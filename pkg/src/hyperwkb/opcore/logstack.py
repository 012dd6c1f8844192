"""Solutions with logarithms: Σ_j (ln var)^j/j! · f_j(var)."""

from __future__ import annotations

import cmath
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from hyperwkb.core.errors import LatticeError, ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import GradedSeries, Variable, lattice_offset


@dataclass(frozen=True, slots=True)
class AlignedStack:
    """All branches of a stack on one grid: rows[j][n] multiplies var^{γ+n/L}·e_j."""

    variable: Variable
    lattice: int
    leading_exponent: Scalar
    rows: tuple[tuple[Scalar, ...], ...]

    @property
    def length(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True, slots=True)
class LogStackSolution:
    """Branches (j, f_j) in descending j; the basis element for j is (ln var)^j/j!."""

    branches: tuple[tuple[int, GradedSeries], ...]

    def __post_init__(self) -> None:
        if not self.branches:
            raise ParameterError("a log stack needs at least one branch", field="branches")
        powers = [j for j, _ in self.branches]
        if len(set(powers)) != len(powers):
            raise ParameterError("log powers must be distinct", field="branches")
        if 0 not in powers:
            raise ParameterError("the log-free branch must be present", field="branches")
        first = self.branches[0][1]
        for _, s in self.branches:
            if s.variable != first.variable:
                raise LatticeError("branches live on different variables")
        object.__setattr__(
            self, "branches", tuple(sorted(self.branches, key=lambda b: b[0], reverse=True))
        )

    @classmethod
    def from_series(cls, series: GradedSeries) -> LogStackSolution:
        return cls(((0, series),))

    @classmethod
    def from_mapping(cls, branches: Mapping[int, GradedSeries]) -> LogStackSolution:
        return cls(tuple(branches.items()))

    @classmethod
    def from_aligned(cls, stack: AlignedStack) -> LogStackSolution:
        """Rebuild from a grid, dropping log rows that vanish identically (except j=0)."""
        out: dict[int, GradedSeries] = {}
        for j, row in enumerate(stack.rows):
            if j > 0 and all(c == 0 for c in row):
                continue
            out[j] = GradedSeries(stack.variable, stack.lattice, stack.leading_exponent, row)
        return cls.from_mapping(out)

    @property
    def variable(self) -> Variable:
        return self.branches[0][1].variable

    @property
    def max_log_power(self) -> int:
        return self.branches[0][0]

    def branch(self, j: int) -> GradedSeries | None:
        for k, s in self.branches:
            if k == j:
                return s
        return None

    @property
    def principal(self) -> GradedSeries:
        """The log-free branch f_0."""
        s = self.branch(0)
        assert s is not None
        return s

    def aligned(self) -> AlignedStack:
        """Put every branch on a common grid; the length stops at the smallest cutoff."""
        lattice = lcm(*(s.lattice for _, s in self.branches))
        series = {j: s.regrid(lattice) for j, s in self.branches}
        base = self.principal.leading_exponent
        for s in series.values():
            if lattice_offset(base, s.leading_exponent, lattice) < 0:
                base = s.leading_exponent
        length = min(
            lattice_offset(base, s.leading_exponent, lattice) + len(s.coefficients)
            for s in series.values()
        )
        rows = []
        for j in range(self.max_log_power + 1):
            s = series.get(j)
            rows.append(s.rebase(base, length) if s is not None else (0,) * length)
        return AlignedStack(self.variable, lattice, base, tuple(rows))

    def __add__(self, other: LogStackSolution) -> LogStackSolution:
        out: dict[int, GradedSeries] = dict(self.branches)
        for j, s in other.branches:
            out[j] = out[j] + s if j in out else s
        return LogStackSolution.from_mapping(out)

    def __sub__(self, other: LogStackSolution) -> LogStackSolution:
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> LogStackSolution:
        return LogStackSolution(tuple((j, s.scale(c)) for j, s in self.branches))

    def shift(self, a: Scalar) -> LogStackSolution:
        return LogStackSolution(tuple((j, s.shift(a)) for j, s in self.branches))

    def truncate(self, order: int) -> LogStackSolution:
        return LogStackSolution(tuple((j, s.truncate(order)) for j, s in self.branches))

    def apply_euler_polynomial(self, poly: EulerPolynomial) -> LogStackSolution:
        """P(𝒟) acting through the log-lowering rule 𝒟(t^a e_j) = a t^a e_j + t^a e_{j-1}."""
        grid = self.aligned()
        rows = [list(r) for r in grid.rows]
        out: list[list[Scalar]] = [[0] * grid.length for _ in rows]
        for n in range(grid.length):
            vec = [r[n] for r in rows]
            if all(v == 0 for v in vec):
                continue
            a = grid.leading_exponent + Fraction(n, grid.lattice)
            for j, w in enumerate(poly.act_on_logs(a, vec)):
                out[j][n] = w
        return LogStackSolution.from_aligned(
            AlignedStack(grid.variable, grid.lattice, grid.leading_exponent, tuple(map(tuple, out)))
        )

    def evaluate(self, x: complex) -> complex:
        """Principal-branch value at x."""
        xc = complex(x)
        logx = cmath.log(xc) if xc != 0 else 0j
        total = 0j
        for j, s in self.branches:
            if j > 0 and xc == 0:
                continue
            total += logx**j / factorial(j) * s.evaluate(xc)
        return total

    def derivative_values(self, x: complex, count: int) -> list[complex]:
        """[u(x), u'(x), …, u^{(count-1)}(x)] with d^k/dx^k = x^{-k}·𝒟(𝒟-1)…(𝒟-k+1)."""
        xc = complex(x)
        values = [self.evaluate(xc)]
        for k in range(1, count):
            dk = self.apply_euler_polynomial(EulerPolynomial.falling_factorial(k))
            values.append(dk.evaluate(xc) / xc**k)
        return values
