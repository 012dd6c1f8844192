"""WKB expansions in a large parameter A for F(Aν₁, …, Aν_{q+1}; β₁, …, β_q; t).

The characteristic roots ρ^{(l)}(η) of ρ^{q+1} = η^{q+1}p(ρ), p(x) = ∏(x + ν_j), are
labelled by their behaviour ρ ≈ η·p(0)^{1/(q+1)}·ζ^l near η = 0 and followed along a
path by nearest-root assignment. Everything else (actions, determinants, amplitudes) is
read off these tracked roots.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from hyperwkb.core.errors import BranchCollisionError, ConvergenceError, ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.special.gamma import gamma
from hyperwkb.wkb.forms import unit_root
from hyperwkb.wkb.thm3 import select_branches

logger = logging.getLogger(__name__)

START_FRACTION = 1e-4
RAMP_STEPS = 32
PHASE_STEPS = 256
COLLISION_TOL = 1e-10
MOVE_FRACTION = 0.25
MAX_HALVINGS = 40
QUAD_START_NODES = 48
QUAD_MAX_NODES = 3072
QUAD_TOL = 1e-12

Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True, slots=True)
class _Characteristic:
    nus: tuple[complex, ...]
    p: np.ndarray  # highest power first

    @classmethod
    def of(cls, nus: Sequence[Scalar]) -> _Characteristic:
        vals = tuple(complex(v) for v in nus)
        if len(vals) < 2:
            raise ParameterError("need at least two scaled upper parameters", field="nus")
        for i, v in enumerate(vals):
            if v == 0:
                raise ParameterError("scaled upper parameters must be nonzero", "nus", i)
        poly = EulerPolynomial.from_roots([-v for v in vals])
        return cls(vals, np.array(poly.coefficients[::-1], dtype=complex))

    @property
    def q(self) -> int:
        return len(self.nus) - 1

    @property
    def kappa(self) -> float:
        return 1.0 / (self.q + 1)

    @property
    def dp(self) -> np.ndarray:
        return np.polyder(self.p)

    def roots(self, eta: complex) -> np.ndarray:
        coeffs = -(eta ** (self.q + 1)) * self.p
        coeffs[0] += 1.0
        found = np.roots(coeffs)
        if len(found) != self.q + 1:
            raise BranchCollisionError("a root escaped to infinity", position=eta ** (self.q + 1))
        return found

    def initial(self, eta: complex) -> np.ndarray:
        lead = cmath.exp(self.kappa * cmath.log(complex(np.prod(self.nus))))
        d = self.q + 1
        return eta * lead * np.array([complex(unit_root(k, d)) for k in range(d)])

    def drho(self, eta: np.ndarray | complex, rho: np.ndarray) -> np.ndarray:
        """dρ/dη from implicit differentiation."""
        q = self.q
        return (
            (q + 1) * eta**q * np.polyval(self.p, rho)
            / ((q + 1) * rho**q - eta ** (q + 1) * np.polyval(self.dp, rho))
        )


def _match(prev: np.ndarray, new: np.ndarray) -> np.ndarray:
    cost = np.abs(prev[:, None] - new[None, :])
    _, cols = linear_sum_assignment(cost)
    return new[cols]


def _min_gap(rho: np.ndarray) -> float:
    gaps = np.abs(rho[:, None] - rho[None, :])
    np.fill_diagonal(gaps, np.inf)
    return float(np.min(gaps))


def _advance(
    char: _Characteristic, prev: np.ndarray, a: complex, b: complex, depth: int = 0
) -> np.ndarray:
    new = _match(prev, char.roots(b))
    gap = _min_gap(new)
    position = b ** (char.q + 1)
    if gap < COLLISION_TOL * float(np.max(np.abs(new))):
        raise BranchCollisionError(f"branches collide near t = {position:.6g}", position=position)
    if float(np.max(np.abs(new - prev))) > MOVE_FRACTION * gap:
        if depth >= MAX_HALVINGS:
            raise BranchCollisionError(
                f"step control failed near t = {position:.6g}", position=position
            )
        mid = (a + b) / 2
        return _advance(char, _advance(char, prev, a, mid, depth + 1), mid, b, depth + 1)
    return new


def _track(char: _Characteristic, etas: np.ndarray) -> np.ndarray:
    """Roots at each η of a path (rows), columns labelled by branch."""
    path = np.asarray(etas, dtype=complex)
    if path[0] == 0:
        raise ParameterError("tracking starts at a nonzero point", field="t_path")
    ramp = path[0] * np.geomspace(START_FRACTION, 1.0, RAMP_STEPS)
    rho = _match(char.initial(ramp[0]), char.roots(ramp[0]))
    for a, b in zip(ramp[:-1], ramp[1:], strict=True):
        rho = _advance(char, rho, a, b)
    out = [rho]
    for a, b in zip(path[:-1], path[1:], strict=True):
        rho = _advance(char, rho, a, b)
        out.append(rho)
    return np.array(out)


def _eta(t: Scalar, q: int) -> complex:
    tc = complex(t)
    if tc == 0:
        raise ParameterError("t must be nonzero", field="t")
    return cmath.exp(cmath.log(tc) / (q + 1))


def _gauss_integral(char: _Characteristic, eta: complex, integrand: Integrand) -> np.ndarray:
    """∫₀^η integrand(σ, ρ(σ)) dσ along the segment, one value per branch."""
    n = QUAD_START_NODES
    previous: np.ndarray | None = None
    while n <= QUAD_MAX_NODES:
        x, w = np.polynomial.legendre.leggauss(n)
        sigma = eta * (x + 1.0) / 2.0
        values = integrand(sigma, _track(char, sigma))
        estimate = (eta / 2.0) * (w @ values)
        if previous is not None:
            change = float(np.max(np.abs(estimate - previous)))
            if change <= QUAD_TOL * max(1.0, float(np.max(np.abs(estimate)))):
                logger.debug(f"path quadrature: {n} nodes, change {change:.2e}")
                return np.asarray(estimate)
        previous = estimate
        n *= 2
    raise ConvergenceError(f"path quadrature did not settle with {QUAD_MAX_NODES} nodes")


def hj_actions(nus: Sequence[Scalar], t_path: Sequence[Scalar]) -> tuple[np.ndarray, np.ndarray]:
    """R^{(l)}(t) = 𝒟S and S^{(l)}(t) = ∫₀ᵗ R(s)/s ds, rows per path point.

    With s = σ^{q+1} the action is (q+1)∫₀^{t^κ} ρ(σ)/σ dσ, a smooth integrand.
    """
    char = _Characteristic.of(nus)
    q = char.q
    rs: list[np.ndarray] = []
    ss: list[np.ndarray] = []
    for t in t_path:
        if complex(t) == 0:
            rs.append(np.zeros(q + 1, dtype=complex))
            ss.append(np.zeros(q + 1, dtype=complex))
            continue
        eta = _eta(t, q)
        rs.append(_track(char, np.array([eta]))[0])
        ss.append((q + 1) * _gauss_integral(char, eta, lambda s, r: r / s[:, None]))
    return np.array(rs), np.array(ss)


def _beta_sum(betas: Sequence[Scalar], q: int) -> complex:
    if len(betas) != q:
        raise ParameterError(f"expected {q} lower parameters, got {len(betas)}", field="betas")
    return sum((complex(b) - 1 for b in betas), 0j)


def transport_amplitude(
    nus: Sequence[Scalar], betas: Sequence[Scalar], branch: int, t_path: Sequence[Scalar]
) -> np.ndarray:
    """Leading transport amplitude ψ₀ of one branch, normalized by ψ₀·t^{κ(q/2+β)} → 1."""
    char = _Characteristic.of(nus)
    q = char.q
    kappa = char.kappa
    if not 0 <= branch <= q:
        raise ParameterError(f"branch must lie in 0..{q}", field="branch")
    beta = _beta_sum(betas, q)
    g0 = kappa * (q / 2 + beta)
    ddp = np.polyder(char.p, 2)

    def integrand(sigma: np.ndarray, rho: np.ndarray) -> np.ndarray:
        s = sigma[:, None]
        t = s ** (q + 1)
        d_rho = kappa * s * char.drho(s, rho)
        num = (0.5 * q * (q + 1) * rho ** (q - 1) - 0.5 * t * np.polyval(ddp, rho)) * d_rho
        num = num + beta * rho**q
        den = (q + 1) * rho**q - t * np.polyval(char.dp, rho)
        return (g0 - num / den) / (kappa * s)

    out: list[complex] = []
    for t in t_path:
        eta = _eta(t, q)
        integral = _gauss_integral(char, eta, integrand)[branch]
        out.append(cmath.exp(-g0 * cmath.log(complex(t)) + integral))
    return np.array(out)


@dataclass(frozen=True, slots=True, eq=False)
class LargeParamWKB:
    """Branch data at one point t; arrays are indexed by branch l = 0..q."""

    nu: tuple[complex, ...]
    t: complex
    rho: np.ndarray
    phi: np.ndarray
    det: np.ndarray
    xi: np.ndarray
    e_const: complex

    @property
    def q(self) -> int:
        return len(self.nu) - 1

    def residual(self) -> float:
        """max |ρ^{q+1} − η^{q+1}p(ρ)|."""
        q = self.q
        eta = _eta(self.t, q)
        p = np.poly([-v for v in self.nu])
        res = self.rho ** (q + 1) - eta ** (q + 1) * np.polyval(p, self.rho)
        return float(np.max(np.abs(res)))


def _action(nus: np.ndarray, rho_path: np.ndarray) -> np.ndarray:
    """φ = Σ ν_j log(1 + ρ/ν_j) with each log continued along the path."""
    z = 1.0 + rho_path[:, :, None] / nus[None, None, :]
    logs = np.log(np.abs(z)) + 1j * np.unwrap(np.angle(z), axis=0)
    return np.asarray(np.sum(nus[None, :] * logs[-1], axis=1))


def large_param_branches(
    nus: Sequence[Scalar], t: Scalar, betas: Sequence[Scalar] | None = None
) -> LargeParamWKB:
    """ρ, φ, Det and ξ for every branch at t; β_j default to 1."""
    char = _Characteristic.of(nus)
    q = char.q
    lower = [1] * q if betas is None else list(betas)
    _beta_sum(lower, q)
    eta = _eta(t, q)
    path = eta * np.linspace(0.0, 1.0, PHASE_STEPS + 1)[1:]
    rho_path = _track(char, path)
    nu = np.array(char.nus)
    rho = rho_path[-1]
    pv = np.polyval(char.p, rho)
    dp = np.polyval(char.dp, rho)
    det = rho ** (q + 1) * pv / np.prod(nu) * ((q + 1) / rho - dp / pv)
    xi = char.kappa * eta * char.drho(eta, rho) * np.sum(nu[:, None] / (nu[:, None] + rho), axis=0)
    e_const = 1 + 0j
    for b in lower:
        e_const *= gamma(b)
    e_const *= (2 * math.pi) ** (-q / 2)
    return LargeParamWKB(char.nus, complex(t), rho, _action(nu, rho_path), det, xi, e_const)


def thm4_eval(
    nus: Sequence[Scalar],
    betas: Sequence[Scalar],
    big_a: float,
    t: Scalar,
    *,
    combine_oscillatory: bool = False,
) -> complex:
    """Σ_l E·A^{−q/2−β}·e^{Aφ}·Det^{−1/2}·ξ^{−β} over the dominant branches."""
    if big_a <= 0:
        raise ParameterError("the large parameter must be positive", field="A")
    data = large_param_branches(nus, t, betas)
    q = data.q
    beta = _beta_sum(betas, q)
    exponents = [float((big_a * ph).real) for ph in data.phi]
    kept = select_branches(exponents, combine_oscillatory=combine_oscillatory)
    scale = data.e_const * cmath.exp((-q / 2 - beta) * math.log(big_a))
    total = 0j
    for k in kept:
        total += scale * cmath.exp(
            big_a * complex(data.phi[k])
            - 0.5 * cmath.log(complex(data.det[k]))
            - beta * cmath.log(complex(data.xi[k]))
        )
    logger.debug(f"thm4_eval: A={big_a}, t={t}, branches {kept}")
    return total
