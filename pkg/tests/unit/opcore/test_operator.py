"""Tests for MellinOperator and the hypergeometric builders."""

from fractions import Fraction

import pytest

from hyperwkb.core.errors import LatticeError, ResonanceError
from hyperwkb.opcore import (
    EulerPolynomial,
    LogStackSolution,
    MellinOperator,
    build_hypergeometric_operator,
    clear_negative_powers,
    formal_series_at_root,
    hypergeometric_polynomials,
    one_minus_t_transform,
    residual_norm,
    substitute_one_minus_t,
)
from hyperwkb.series import HyperParams, pfq_series

GAUSS = HyperParams.of([Fraction(1, 2), Fraction(1, 3)], [1])


class TestMellinOperator:
    def test_terms_are_merged_and_sorted(self) -> None:
        op = MellinOperator(
            (
                (Fraction(1), EulerPolynomial((1,))),
                (Fraction(0), EulerPolynomial((0, 1))),
                (Fraction(1), EulerPolynomial((-1,))),
            )
        )
        assert op.offsets == (0,)
        assert op.order == 1

    def test_lattice_follows_offsets(self) -> None:
        assert MellinOperator.monomial(Fraction(1, 2)).lattice == 2

    def test_commutator(self) -> None:
        d = MellinOperator.euler()
        t = MellinOperator.monomial(1)
        comm = (d @ t) - (t @ d)
        assert comm.terms == ((Fraction(1), EulerPolynomial((1,))),)

    def test_binomial(self) -> None:
        op = MellinOperator.binomial(2, 3)
        assert [op.coefficient(k).coefficients for k in range(3)] == [(1,), (6,), (9,)]
        inv = MellinOperator.binomial(-1, 1, order=3)
        assert [inv.coefficient(k)(0) for k in range(4)] == [1, -1, 1, -1]

    def test_substitute_polynomial(self) -> None:
        square = EulerPolynomial((0, 0, 1))
        d = MellinOperator.euler()
        assert d.substitute_polynomial(square) == MellinOperator.polynomial(square)

    def test_invert_variable_twice(self) -> None:
        op = build_hypergeometric_operator(GAUSS)
        inv = op.invert_variable()
        assert inv.variable == "1/t"
        assert inv.offsets == (-1, 0)
        assert inv.invert_variable() == op

    def test_variable_mismatch(self) -> None:
        with pytest.raises(LatticeError):
            MellinOperator.euler() + MellinOperator.euler("s")

    def test_clear_negative_powers(self) -> None:
        op = MellinOperator.from_mapping(
            {-2: EulerPolynomial.identity(), 1: EulerPolynomial.constant(1)}
        )
        cleared, k = clear_negative_powers(op)
        assert k == 2
        assert cleared.offsets == (0, 3)


class TestBuilders:
    def test_polynomials(self) -> None:
        q, p = hypergeometric_polynomials(HyperParams.of([1, 1], [2]))
        assert q.coefficients == (0, 1, 1)
        assert p.coefficients == (1, 2, 1)

    def test_operator_annihilates_taylor_series(self) -> None:
        op = build_hypergeometric_operator(GAUSS)
        sol = LogStackSolution.from_series(pfq_series(GAUSS, 12))
        assert residual_norm(op, sol) == 0

    def test_formal_series_matches_taylor(self) -> None:
        params = HyperParams.of([], [1])
        op = build_hypergeometric_operator(params)
        series = formal_series_at_root(op, 0, 6)
        assert series.coefficients == pfq_series(params, 6).coefficients

    def test_resonance(self) -> None:
        op = MellinOperator(
            (
                (Fraction(0), EulerPolynomial.from_roots([0, 1])),
                (Fraction(1), EulerPolynomial.constant(-1)),
            )
        )
        with pytest.raises(ResonanceError) as exc:
            formal_series_at_root(op, 0, 3)
        assert exc.value.order == 1

    def test_lowest_offset_must_be_zero(self) -> None:
        op = build_hypergeometric_operator(GAUSS).left_shift(1)
        with pytest.raises(LatticeError):
            formal_series_at_root(op, 0, 3)

    def test_exponents_at_one(self) -> None:
        op, shift = one_minus_t_transform(build_hypergeometric_operator(GAUSS))
        assert shift == 1
        assert op.variable == "s"
        assert op.offsets[0] == 0
        # exponents 0 and c − a − b
        assert op.indicial_polynomial().coefficients == (0, Fraction(-1, 6), 1)

    def test_substitute_drops_the_cleared_power(self) -> None:
        op = build_hypergeometric_operator(GAUSS)
        assert substitute_one_minus_t(op) == one_minus_t_transform(op)[0]

    def test_substitute_needs_integer_lattice(self) -> None:
        op = MellinOperator(
            ((Fraction(0), EulerPolynomial((0, 1))), (Fraction(1, 2), EulerPolynomial((1,))))
        )
        with pytest.raises(LatticeError):
            substitute_one_minus_t(op)
