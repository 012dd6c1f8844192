"""The Wasow transform Q = F·F₀⁻¹ between ü = (t + μψ̃)u and the Airy equation."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction

from hyperwkb.core.scalars import Scalar, div, is_exact

logger = logging.getLogger(__name__)

DEFAULT_T_ORDER = 20
DEFAULT_MU_ORDER = 12

Entry = tuple[int, int]  # (row, column), 1-based


@dataclass(frozen=True, slots=True)
class BivariateSeries:
    """Σ c[a][b]·μ^a·t^b for a ≤ mu_order, b ≤ t_order."""

    coefficients: tuple[tuple[Scalar, ...], ...]

    @classmethod
    def zero(cls, mu_order: int, t_order: int) -> BivariateSeries:
        return cls(tuple((0,) * (t_order + 1) for _ in range(mu_order + 1)))

    @classmethod
    def constant(cls, c: Scalar, mu_order: int, t_order: int) -> BivariateSeries:
        rows = [[0] * (t_order + 1) for _ in range(mu_order + 1)]
        rows[0][0] = c
        return cls(tuple(map(tuple, rows)))

    @classmethod
    def from_t_columns(cls, columns: list[list[Scalar]]) -> BivariateSeries:
        """From columns[b][a], the μ-polynomial multiplying t^b."""
        mu_len = len(columns[0])
        return cls(tuple(tuple(col[a] for col in columns) for a in range(mu_len)))

    @property
    def mu_order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def t_order(self) -> int:
        return len(self.coefficients[0]) - 1

    def coefficient(self, a: int, b: int) -> Scalar:
        return self.coefficients[a][b]

    def monomials(self, tol: float = 0.0) -> Iterator[tuple[int, int, Scalar]]:
        for a, row in enumerate(self.coefficients):
            for b, c in enumerate(row):
                if c != 0 and float(abs(c)) > tol:
                    yield a, b, c

    def is_exact(self) -> bool:
        return all(is_exact(c) for row in self.coefficients for c in row)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        return BivariateSeries(
            tuple(
                tuple(x + y for x, y in zip(r, s, strict=True))
                for r, s in zip(self.coefficients, other.coefficients, strict=True)
            )
        )

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries(tuple(tuple(-x for x in r) for r in self.coefficients))

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + (-other)

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        ma, mb = self.mu_order, self.t_order
        out: list[list[Scalar]] = [[0] * (mb + 1) for _ in range(ma + 1)]
        right = list(other.monomials())
        for a, b, c in self.monomials():
            for a2, b2, c2 in right:
                if a + a2 <= ma and b + b2 <= mb:
                    out[a + a2][b + b2] = out[a + a2][b + b2] + c * c2
        return BivariateSeries(tuple(map(tuple, out)))

    def derivative_t(self) -> BivariateSeries:
        """d/dt; the top t-coefficient becomes unknown and is set to 0."""
        rows = (
            tuple(r[b + 1] * (b + 1) for b in range(len(r) - 1)) + (0,) for r in self.coefficients
        )
        return BivariateSeries(tuple(rows))

    def max_abs(self) -> float:
        return max((float(abs(c)) for _, _, c in self.monomials()), default=0.0)

    def lowest_mu_degree(self, tol: float = 0.0) -> int | None:
        degrees = [a for a, _, _ in self.monomials(tol)]
        return min(degrees) if degrees else None


def _grading_shift(entry: Entry) -> int:
    """Residue r with a ≡ 2b + r (mod 3) for monomials μ^a t^b of the given entry."""
    return {(1, 1): 0, (2, 2): 0, (1, 2): 1, (2, 1): -1}[entry]


MatrixRow = tuple[BivariateSeries, BivariateSeries]


@dataclass(frozen=True, slots=True)
class WasowTransform:
    """Q(t; μ) = F·F₀⁻¹ with F, F₀ the unit-Wronskian fundamental matrices."""

    entries: tuple[MatrixRow, MatrixRow]
    t_order: int
    mu_order: int

    def entry(self, row: int, col: int) -> BivariateSeries:
        return self.entries[row - 1][col - 1]

    def determinant(self) -> BivariateSeries:
        return self.entry(1, 1) * self.entry(2, 2) - self.entry(1, 2) * self.entry(2, 1)

    def at_mu_zero(self) -> tuple[tuple[tuple[Scalar, ...], ...], ...]:
        """The μ⁰ rows of each entry."""
        return tuple(tuple(e.coefficients[0] for e in row) for row in self.entries)

    def reliable(self, b: int, entry: Entry) -> bool:
        """Whether the t^b coefficient of an entry survives the t-truncation of F."""
        return b <= self.t_order - (2 if entry[0] == 2 else 1)

    def grading_violations(self, tol: float = 0.0) -> list[tuple[Entry, int, int]]:
        """Monomials μ^a t^b breaking a ≡ 2b + r (mod 3)."""
        out: list[tuple[Entry, int, int]] = []
        for entry in ((1, 1), (1, 2), (2, 1), (2, 2)):
            shift = _grading_shift(entry)
            for a, b, _ in self.entry(*entry).monomials(tol):
                if self.reliable(b, entry) and (a - 2 * b - shift) % 3:
                    out.append((entry, a, b))
        return out

    def epsilon_powers(self, tol: float = 0.0) -> dict[Entry, set[Fraction]]:
        """Exponents of ε in P = CQC⁻¹ rewritten with t = ε^{−2/3}x, μ = ε^{1/3}.

        C = diag(1, μ), so entry (1,2) loses and entry (2,1) gains one power of μ.
        """
        out: dict[Entry, set[Fraction]] = {}
        for entry in ((1, 1), (1, 2), (2, 1), (2, 2)):
            extra = {(1, 2): -1, (2, 1): 1}.get(entry, 0)
            out[entry] = {
                Fraction(a + extra - 2 * b, 3)
                for a, b, _ in self.entry(*entry).monomials(tol)
                if self.reliable(b, entry)
            }
        return out


def _solve(
    psi: Mapping[tuple[int, int], Scalar],
    initial: tuple[Scalar, Scalar],
    t_order: int,
    mu_order: int,
) -> BivariateSeries:
    """Power series of ü = (t + μψ(μ²t, μ³))u with u(0), u̇(0) given."""
    # μψ̃ = Σ ψ_ij μ^{1+2i+3j} t^i
    pert = [(i, 1 + 2 * i + 3 * j, c) for (i, j), c in psi.items() if c != 0]
    cols: list[list[Scalar]] = [[0] * (mu_order + 1) for _ in range(t_order + 1)]
    cols[0][0] = initial[0]
    if t_order >= 1:
        cols[1][0] = initial[1]
    for b in range(t_order - 1):
        rhs: list[Scalar] = list(cols[b - 1]) if b >= 1 else [0] * (mu_order + 1)
        for i, shift, c in pert:
            if i > b:
                continue
            src = cols[b - i]
            for a in range(mu_order + 1 - shift):
                if src[a] != 0:
                    rhs[a + shift] = rhs[a + shift] + c * src[a]
        cols[b + 2] = [div(x, (b + 2) * (b + 1)) for x in rhs]
    return BivariateSeries.from_t_columns(cols)


def wasow_transform(
    psi: Mapping[tuple[int, int], Scalar],
    t_order: int = DEFAULT_T_ORDER,
    mu_order: int = DEFAULT_MU_ORDER,
) -> WasowTransform:
    """Q = F·F₀⁻¹ for ψ(x; ε) = Σ psi[(i, j)]·x^i·ε^j.

    F₀⁻¹ = [[u̇₂, −u₂], [−u̇₁, u₁]] since det F₀ = 1.
    """
    v1 = _solve(psi, (1, 0), t_order, mu_order)
    v2 = _solve(psi, (0, 1), t_order, mu_order)
    u1 = _solve({}, (1, 0), t_order, mu_order)
    u2 = _solve({}, (0, 1), t_order, mu_order)
    dv1, dv2, du1, du2 = (f.derivative_t() for f in (v1, v2, u1, u2))
    q11 = v1 * du2 - v2 * du1
    q12 = v2 * u1 - v1 * u2
    q21 = dv1 * du2 - dv2 * du1
    q22 = dv2 * u1 - dv1 * u2
    logger.debug(f"wasow_transform: ψ terms {sorted(psi)}, orders (t={t_order}, μ={mu_order})")
    return WasowTransform(((q11, q12), (q21, q22)), t_order, mu_order)
