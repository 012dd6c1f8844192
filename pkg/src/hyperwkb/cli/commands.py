"""Subcommand handlers: each turns a RunConfig into records or a reportable error."""

from __future__ import annotations

import logging
from collections.abc import Callable

from hyperwkb.cli.checks import CheckContext, run_checks, to_row
from hyperwkb.cli.config import RunConfig
from hyperwkb.cli.models import (
    EvalRecord,
    Record,
    SeriesRecord,
    SuiteRecord,
    ValueRecord,
    pair,
)
from hyperwkb.cli.suites import suite_checks
from hyperwkb.core.domain_errors import NumericDomainError, UsageError, to_domain_error
from hyperwkb.core.errors import HyperwkbError
from hyperwkb.core.result import Err, Ok, Result, count_ok
from hyperwkb.core.scalars import Scalar, is_exact
from hyperwkb.opcore import GradedSeries
from hyperwkb.series import HyperParams, MZVIndex, multi_polylog, mzv, pfq_eval, pfq_series
from hyperwkb.variations import (
    PerturbedOperator,
    airy_perturbation,
    bessel_perturbation,
    binomial_operator,
    v2_perturbation,
    variation_recurrence,
)
from hyperwkb.wkb import thm3_asymptotic_eval, thm4_eval

logger = logging.getLogger(__name__)

CommandError = NumericDomainError | UsageError
CommandResult = Result[list[Record], CommandError]


def _require_params(cfg: RunConfig) -> HyperParams | UsageError:
    if cfg.params is None:
        return UsageError(field="pfq", reason=f"{cfg.command} needs --pfq")
    return cfg.params


def _require_t(cfg: RunConfig) -> tuple[Scalar, ...] | UsageError:
    if not cfg.t:
        return UsageError(field="t", reason=f"{cfg.command} needs at least one --t")
    return cfg.t


def _series_record(command: str, label: str, series: GradedSeries) -> SeriesRecord:
    coeffs = series.coefficients
    exact = [str(c) for c in coeffs] if all(is_exact(c) for c in coeffs) else None
    return SeriesRecord(
        command=command,
        params=label,
        variable=series.variable,
        leading_exponent=str(series.leading_exponent),
        coefficients=[pair(c) for c in coeffs],
        exact=exact,
    )


def eval_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    params = _require_params(cfg)
    if isinstance(params, UsageError):
        return Err(params)
    ts = _require_t(cfg)
    if isinstance(ts, UsageError):
        return Err(ts)
    records: list[Record] = []
    for t in ts:
        out = pfq_eval(params, t, tol=cfg.tol)
        records.append(
            EvalRecord(
                command="eval",
                params=str(params),
                t=pair(t),
                value=pair(out.value),
                est_error=out.est_error,
                route=params.kind,
            )
        )
    return Ok(records)


def series_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    params = _require_params(cfg)
    if isinstance(params, UsageError):
        return Err(params)
    series = pfq_series(params, cfg.order, formal=params.kind == "divergent")
    return Ok([_series_record("series", str(params), series)])


def wkb_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    ts = _require_t(cfg)
    if isinstance(ts, UsageError):
        return Err(ts)
    records: list[Record] = []
    if cfg.big_a is not None:
        if not cfg.nus:
            return Err(UsageError(field="nus", reason="the large-parameter form needs --nus"))
        for t in ts:
            value = thm4_eval(
                cfg.nus, cfg.betas, cfg.big_a, t, combine_oscillatory=cfg.combine
            )
            records.append(
                ValueRecord(
                    command="wkb",
                    value=pair(value),
                    route="large_parameter",
                    details={"A": cfg.big_a, "t": pair(t), "nus": [str(v) for v in cfg.nus]},
                )
            )
        return Ok(records)
    params = _require_params(cfg)
    if isinstance(params, UsageError):
        return Err(params)
    for t in ts:
        value = thm3_asymptotic_eval(
            params, complex(t), cfg.terms, combine_oscillatory=cfg.combine
        )
        records.append(
            ValueRecord(
                command="wkb",
                value=pair(value),
                route="confluent",
                details={"params": str(params), "t": pair(t), "terms": cfg.terms},
            )
        )
    return Ok(records)


def _perturbation(cfg: RunConfig) -> tuple[str, PerturbedOperator]:
    if cfg.example == "binomial":
        label = f"binomial(alpha={cfg.alpha},gamma={cfg.gamma})"
        return label, binomial_operator(cfg.alpha, cfg.gamma)
    if cfg.example == "bessel":
        return "bessel", bessel_perturbation()
    if cfg.example == "v2":
        return "v2", v2_perturbation()
    return "airy", airy_perturbation()


def variation_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    label, pert = _perturbation(cfg)
    chain = variation_recurrence(pert, cfg.k, cfg.order)
    return Ok([_series_record("variation", f"{label},k={cfg.k}", chain[cfg.k])])


def mzv_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    if not cfg.index:
        return Err(UsageError(field="index", reason="mzv needs --index"))
    index = MZVIndex(exponents=cfg.index)
    details: dict[str, object] = {"index": list(index.exponents), "weight": index.weight}
    if not cfg.t:
        value = mzv(index)
        return Ok([ValueRecord(command="mzv", value=value, route="mzv", details=details)])
    records: list[Record] = []
    for t in cfg.t:
        if isinstance(t, complex):
            return Err(UsageError(field="t", reason="multiple polylogarithms take real t"))
        value = multi_polylog(index, float(t))
        records.append(
            ValueRecord(
                command="mzv",
                value=value,
                route="polylog",
                details={**details, "t": float(t)},
            )
        )
    return Ok(records)


def verify_command(cfg: RunConfig, threads: int = 1) -> CommandResult:
    checks = suite_checks(cfg.suite)
    results = run_checks(checks, CheckContext(qmax=cfg.qmax, seed=cfg.seed), threads)
    rows = [to_row(check, result) for check, result in results]
    n_passed, n_checks = count_ok(result for _, result in results)
    passed = n_passed == n_checks
    logger.info(f"verify {cfg.suite}: {n_passed}/{n_checks} checks passed")
    return Ok(
        [
            SuiteRecord(
                command="verify", suite=cfg.suite, seed=cfg.seed, passed=passed, checks=rows
            )
        ]
    )


HANDLERS: dict[str, Callable[[RunConfig, int], CommandResult]] = {
    "eval": eval_command,
    "series": series_command,
    "wkb": wkb_command,
    "variation": variation_command,
    "mzv": mzv_command,
    "verify": verify_command,
}


def execute(cfg: RunConfig, threads: int = 1) -> CommandResult:
    """Run one command; library errors come back as Err(NumericDomainError)."""
    try:
        return HANDLERS[cfg.command](cfg, threads)
    except HyperwkbError as e:
        err = to_domain_error(e)
        logger.debug(f"{cfg.command} failed with {err.kind}: {err.message}")
        return Err(err)
