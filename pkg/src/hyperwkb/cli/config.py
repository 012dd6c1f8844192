"""Parsing of command-line values into a validated run configuration."""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, SkipValidation

from hyperwkb.core.config import DEFAULT_MAX_ORDER
from hyperwkb.core.errors import ParameterError
from hyperwkb.core.scalars import Scalar
from hyperwkb.series.params import HyperParams

Command = Literal["eval", "series", "wkb", "variation", "mzv", "verify"]
OutputFormat = Literal["json", "csv"]
SuiteName = Literal[
    "closed-form",
    "integral",
    "frobenius",
    "lemma21",
    "wkb",
    "variations",
    "wasow",
    "connection",
    "all",
]
VariationExample = Literal["binomial", "bessel", "v2", "airy"]
ScalarValue = Annotated[Scalar, SkipValidation]
Scalars = Annotated[tuple[Scalar, ...], SkipValidation]

MAX_TOL = 1e-2
DEFAULT_EVAL_TOL = 1e-14
DEFAULT_ORDER = 20
DEFAULT_QMAX = 7


def parse_item(text: str, field: str, index: int | None = None) -> Scalar:
    """One list entry: an integer, a ratio p/q, a float or a complex literal such as 0.5+1j."""
    s = text.strip()
    if not s:
        raise ParameterError(f"empty entry in {field}", field=field, index=index)
    try:
        return int(s)
    except ValueError:
        pass
    try:
        if "/" in s:
            return Fraction(s)
        return float(s)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(s.replace("i", "j") if s.endswith("i") else s)
    except ValueError:
        raise ParameterError(f"{s!r} is not a number", field=field, index=index) from None


def parse_list(text: str, field: str) -> tuple[Scalar, ...]:
    """Comma-separated entries; an empty string is the empty list."""
    if not text.strip():
        return ()
    return tuple(parse_item(part, field, i) for i, part in enumerate(text.split(",")))


def parse_scalar(text: str, field: str) -> Scalar:
    """A complex scalar written as "re" or "re,im"."""
    parts = text.split(",")
    if len(parts) == 1:
        return parse_item(parts[0], field)
    if len(parts) == 2:
        re, im = (parse_item(p, field, i) for i, p in enumerate(parts))
        if isinstance(re, complex) or isinstance(im, complex):
            raise ParameterError(f"{text!r}: use re,im with real parts", field=field)
        return complex(float(re), float(im)) if im != 0 else re
    raise ParameterError(f"{text!r} is not of the form re or re,im", field=field)


def parse_pfq(text: str) -> HyperParams:
    """Upper and lower parameters as "a1,a2;b1"."""
    if text.count(";") != 1:
        raise ParameterError(f"{text!r} must look like 'a1,a2;b1'", field="pfq")
    upper, lower = text.split(";")
    return HyperParams.of(parse_list(upper, "pfq.upper"), parse_list(lower, "pfq.lower"))


def parse_index(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for i, item in enumerate(parse_list(text, "index")):
        if not isinstance(item, int):
            raise ParameterError(f"MZV exponents are integers, got {item}", field="index", index=i)
        out.append(item)
    return tuple(out)


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: Command
    output_format: OutputFormat = "json"
    params: HyperParams | None = None
    t: Scalars = ()
    lam: Scalars = ()
    big_a: float | None = None
    nus: Scalars = ()
    betas: Scalars = ()
    index: tuple[int, ...] = ()
    example: VariationExample = "binomial"
    alpha: ScalarValue = 1
    gamma: ScalarValue = 0
    k: int = Field(default=1, ge=0)
    terms: int = Field(default=1, ge=1)
    combine: bool = False
    tol: float = Field(default=DEFAULT_EVAL_TOL, gt=0.0, le=MAX_TOL)
    order: int = Field(default=DEFAULT_ORDER, ge=0, le=DEFAULT_MAX_ORDER)
    suite: SuiteName = "all"
    qmax: int = Field(default=DEFAULT_QMAX, ge=1, le=DEFAULT_MAX_ORDER)
    seed: int | None = None
    out: str | None = None
