"""Validated parameter sets for pFq series and multiple zeta values."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, SkipValidation, field_validator

from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar, is_nonpositive_integer

SeriesKind = Literal["polynomial", "balanced", "confluent", "divergent"]

_SCALAR_TYPES = (int, Fraction, float, complex)


def _as_scalars(value: Any, field: str) -> tuple[Scalar, ...]:
    if not isinstance(value, Sequence) or isinstance(value, str):
        raise ParameterError(f"{field} must be a sequence of numbers", field=field)
    out: list[Scalar] = []
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, _SCALAR_TYPES):
            raise ParameterError(f"{field}[{i}] = {v!r} is not a number", field=field, index=i)
        out.append(v)
    return tuple(out)


class HyperParams(BaseModel):
    """Upper parameters α₁..α_p and lower parameters β₁..β_q of pFq(α; β; t)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    upper: Annotated[tuple[Scalar, ...], SkipValidation] = ()
    lower: Annotated[tuple[Scalar, ...], SkipValidation] = ()

    @field_validator("upper", mode="before")
    @classmethod
    def _check_upper(cls, value: Any) -> tuple[Scalar, ...]:
        return _as_scalars(value, "upper")

    @field_validator("lower", mode="before")
    @classmethod
    def _check_lower(cls, value: Any) -> tuple[Scalar, ...]:
        lower = _as_scalars(value, "lower")
        for j, b in enumerate(lower):
            if is_nonpositive_integer(b, tol=1e-14):
                raise ParameterError(
                    f"lower parameter β[{j}] = {b} is a nonpositive integer", field="lower", index=j
                )
        return lower

    @classmethod
    def of(cls, upper: Sequence[Scalar] = (), lower: Sequence[Scalar] = ()) -> HyperParams:
        return cls(upper=tuple(upper), lower=tuple(lower))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def terminating_degree(self) -> int | None:
        """Smallest −α over α ∈ ℤ≤0, i.e. the polynomial degree, else None."""
        degrees = [
            -round(complex(a).real) for a in self.upper if is_nonpositive_integer(a, tol=1e-14)
        ]
        return min(degrees) if degrees else None

    @property
    def kind(self) -> SeriesKind:
        if self.terminating_degree is not None:
            return "polynomial"
        if self.p == self.q + 1:
            return "balanced"
        if self.p < self.q + 1:
            return "confluent"
        return "divergent"

    @property
    def excess(self) -> complex:
        """Σβ − Σα, whose real part governs convergence at t = 1."""
        return complex(sum(self.lower, 0) - sum(self.upper, 0))

    def __str__(self) -> str:
        up = ",".join(str(a) for a in self.upper)
        lo = ",".join(str(b) for b in self.lower)
        return f"{self.p}F{self.q}({up};{lo})"


class MZVIndex(BaseModel, frozen=True):
    """Exponents d₁..d_k of ζ(d₁,…,d_k) = Σ_{0<n₁<…<n_k} ∏ n_j^{−d_j}."""

    exponents: tuple[int, ...]

    @field_validator("exponents", mode="before")
    @classmethod
    def _check_exponents(cls, value: Any) -> tuple[int, ...]:
        if isinstance(value, int):
            value = (value,)
        exps = tuple(value)
        if not exps:
            raise ParameterError("an MZV index needs at least one exponent", field="exponents")
        for i, d in enumerate(exps):
            if isinstance(d, bool) or not isinstance(d, int) or d < 1:
                raise ParameterError(
                    f"exponent {d!r} must be a positive integer", field="exponents", index=i
                )
        return exps

    @classmethod
    def of(cls, *exponents: int) -> MZVIndex:
        return cls(exponents=exponents)

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def admissible(self) -> bool:
        """Convergent at t = 1 (last exponent at least 2)."""
        return self.exponents[-1] >= 2

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"
