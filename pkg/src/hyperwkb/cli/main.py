"""Entry point of the hyperwkb command."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any, TextIO, get_args

from pydantic import ValidationError as PydanticValidationError

from hyperwkb.cli.commands import execute
from hyperwkb.cli.config import (
    DEFAULT_EVAL_TOL,
    DEFAULT_ORDER,
    DEFAULT_QMAX,
    RunConfig,
    SuiteName,
    VariationExample,
    parse_index,
    parse_list,
    parse_pfq,
    parse_scalar,
)
from hyperwkb.cli.models import SuiteRecord
from hyperwkb.cli.output import write_error, write_records
from hyperwkb.core.config import LogLevel, load_settings
from hyperwkb.core.domain_errors import UsageError
from hyperwkb.core.errors import ParameterError
from hyperwkb.core.result import Err

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write records to this file instead of stdout")
    common.add_argument("--log-level", choices=list(get_args(LogLevel)), default=None)
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")

    parser = argparse.ArgumentParser(
        prog="hyperwkb",
        description="Hypergeometric functions, their local and WKB expansions, and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="sum a pFq at one or more points")
    p.add_argument("--pfq", required=True, help='parameters as "a1,a2;b1"')
    p.add_argument("--t", action="append", default=[], help='argument as "re" or "re,im"')
    p.add_argument("--tol", type=float, default=DEFAULT_EVAL_TOL)

    p = sub.add_parser("series", parents=[common], help="Taylor coefficients of a pFq")
    p.add_argument("--pfq", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("wkb", parents=[common], help="leading asymptotics at infinity")
    p.add_argument("--pfq", help="completely confluent parameters ';b1,...,bq'")
    p.add_argument("--t", action="append", default=[])
    p.add_argument("--terms", type=int, default=1, help="amplitude terms")
    p.add_argument("--combine", action="store_true", help="sum tied oscillatory branches")
    p.add_argument("--A", dest="big_a", type=float, help="large parameter")
    p.add_argument("--nus", default="", help="ν_1,...,ν_q of the large-parameter form")
    p.add_argument("--betas", default="", help="β_1,...,β_q of the large-parameter form")

    p = sub.add_parser("variation", parents=[common], help="variation u_{0,k} of a perturbation")
    p.add_argument("--example", choices=list(get_args(VariationExample)), default="binomial")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--alpha", default="1")
    p.add_argument("--gamma", default="0")

    p = sub.add_parser("mzv", parents=[common], help="multiple zeta values and polylogarithms")
    p.add_argument("--index", required=True, help="exponents d1,...,dk")
    p.add_argument("--t", action="append", default=[])

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=list(get_args(SuiteName)), default="all")
    p.add_argument("--qmax", type=int, default=DEFAULT_QMAX)
    return parser


def to_config(ns: argparse.Namespace) -> RunConfig:
    """Parse raw option strings; raises ParameterError or a pydantic ValidationError."""
    values: dict[str, Any] = {
        "command": ns.command,
        "output_format": ns.format,
        "seed": ns.seed,
        "out": ns.out,
    }
    if getattr(ns, "pfq", None):
        values["params"] = parse_pfq(ns.pfq)
    if getattr(ns, "t", None):
        values["t"] = tuple(parse_scalar(s, "t") for s in ns.t)
    if ns.command == "eval":
        values["tol"] = ns.tol
    elif ns.command == "series":
        values["order"] = ns.order
    elif ns.command == "wkb":
        values |= {
            "terms": ns.terms,
            "combine": ns.combine,
            "big_a": ns.big_a,
            "nus": parse_list(ns.nus, "nus"),
            "betas": parse_list(ns.betas, "betas"),
        }
    elif ns.command == "variation":
        values |= {
            "example": ns.example,
            "k": ns.k,
            "order": ns.order,
            "alpha": parse_scalar(ns.alpha, "alpha"),
            "gamma": parse_scalar(ns.gamma, "gamma"),
        }
    elif ns.command == "mzv":
        values["index"] = parse_index(ns.index)
    elif ns.command == "verify":
        values |= {"suite": ns.suite, "qmax": ns.qmax}
    return RunConfig.model_validate(values)


def _usage(error: UsageError) -> int:
    print(f"hyperwkb: error: {error.field}: {error.reason}", file=sys.stderr)
    return EXIT_USAGE


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Exit code 0 on success, 1 on failed checks or numeric errors, 2 on usage errors."""
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings()
    except ParameterError as e:
        return _usage(UsageError(field=e.field, reason=str(e)))
    logging.basicConfig(
        stream=sys.stderr, level=ns.log_level or settings.log_level, format=LOG_FORMAT
    )

    try:
        cfg = to_config(ns)
    except ParameterError as e:
        return _usage(UsageError(field=e.field, reason=str(e)))
    except PydanticValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "argument"
        return _usage(UsageError(field=field, reason=first["msg"]))

    logger.debug(f"running {cfg.command} with {settings.threads} thread(s)")
    result = execute(cfg, settings.threads)
    if isinstance(result, Err):
        error = result.error
        if isinstance(error, UsageError):
            return _usage(error)
        write_error(cfg.command, error, out)
        return EXIT_FAILED

    records = result.value
    if cfg.out is not None:
        with open(cfg.out, "w", encoding="utf-8", newline="") as f:
            write_records(records, cfg.output_format, f)
    else:
        write_records(records, cfg.output_format, out)
    failed = any(isinstance(r, SuiteRecord) and not r.passed for r in records)
    return EXIT_FAILED if failed else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
