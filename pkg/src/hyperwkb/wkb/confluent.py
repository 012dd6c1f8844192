"""Formal WKB solutions of confluent hypergeometric equations at t = ∞."""

from __future__ import annotations

import logging
from fractions import Fraction

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar, div
from hyperwkb.opcore.action import formal_series_at_root
from hyperwkb.opcore.builders import hypergeometric_polynomials
from hyperwkb.opcore.operator import MellinOperator, clear_negative_powers
from hyperwkb.opcore.polynomial import EulerPolynomial
from hyperwkb.opcore.series import GradedSeries
from hyperwkb.series.params import HyperParams
from hyperwkb.wkb.forms import WKBForm, unit_root

logger = logging.getLogger(__name__)

CANCELLATION_TOL = 1e-12


def confluence_degree(params: HyperParams) -> int:
    d = params.q + 1 - params.p
    if d < 1:
        raise ParameterError(f"{params} is not confluent (needs p < q + 1)", field="upper")
    return d


def wkb_exponents(params: HyperParams, k: int = 0) -> tuple[Fraction, Scalar, Scalar]:
    """(κ, c_k, μ) with κ = 1/d, c_k = d·ζ^k and μ = κ(Σα − Σ(β−1) − q/2 − p/2)."""
    d = confluence_degree(params)
    kappa = Fraction(1, d)
    c = d * unit_root(k, d)
    alpha = sum(params.upper, 0)
    beta = sum((b - 1 for b in params.lower), 0)
    mu = kappa * (alpha - beta - Fraction(params.q, 2) - Fraction(params.p, 2))
    return kappa, c, mu


def _conjugated(params: HyperParams, kappa: Fraction, c: Scalar, mu: Scalar) -> MellinOperator:
    """e^{−ct^κ}t^{−μ}∘(Q − tP)∘e^{ct^κ}t^μ, i.e. 𝒟 replaced by 𝒟 + μ + cκt^κ."""
    q_poly, p_poly = hypergeometric_polynomials(params)
    x_op = MellinOperator(
        ((Fraction(0), EulerPolynomial((mu, 1))), (kappa, EulerPolynomial.constant(c * kappa)))
    )
    return x_op.substitute_polynomial(q_poly) - (
        MellinOperator.monomial(1) @ x_op.substitute_polynomial(p_poly)
    )


def amplitude_operator(params: HyperParams, k: int = 0) -> MellinOperator:
    """Operator annihilating the amplitude H(w), w = t^{−κ}, with its lowest offset at 0.

    t^a P(𝒟_t) becomes w^{−a/κ}P(−κ𝒟_w); the identically vanishing top term (the
    eikonal condition c^d = d^d) is removed even when rounding leaves a residue.
    """
    kappa, c, mu = wkb_exponents(params, k)
    d = kappa.denominator
    conj = _conjugated(params, kappa, c, mu)
    op_w = MellinOperator(
        tuple((-m * d, p.scale(-kappa)) for m, p in conj.terms), 1, "1/t"
    )
    op_w, _ = clear_negative_powers(op_w)
    lowest = op_w.indicial_polynomial()
    scale = max(float(abs(x)) for _, p in op_w.terms for x in p.coefficients)
    if lowest.degree == 0 and float(abs(lowest.coefficients[0])) <= CANCELLATION_TOL * scale:
        op_w, _ = clear_negative_powers(MellinOperator(op_w.terms[1:], 1, "1/t"))
    residue = complex(op_w.indicial_polynomial()(0))
    logger.debug(f"amplitude_operator: {params}, branch {k}, P₀(0) = {residue:.2e}")
    return op_w


def confluent_wkb(params: HyperParams, k: int = 0, order: int = 10) -> WKBForm:
    """The k-th formal solution e^{c_k t^κ}t^μ H_k(t^{−κ}) at infinity."""
    kappa, c, mu = wkb_exponents(params, k)
    op_w = amplitude_operator(params, k)
    h = formal_series_at_root(op_w, 0, order)
    lead = h.coefficients[0]
    coeffs = tuple(div(x, lead) for x in h.coefficients)
    amplitude = GradedSeries("1/t", kappa.denominator, 0, coeffs)
    return WKBForm(kappa, c, mu, amplitude, k % kappa.denominator)
