"""Command-line surface: evaluation, expansion and verification with machine-readable output."""

from hyperwkb.cli.checks import Check, CheckContext, run_check, run_checks
from hyperwkb.cli.commands import execute
from hyperwkb.cli.config import RunConfig, parse_pfq, parse_scalar
from hyperwkb.cli.main import main, run
from hyperwkb.cli.models import SCHEMA, CheckReport, CheckRow, EvalRecord, SuiteRecord

__all__ = [
    # Entry points
    "run",
    "main",
    "execute",
    # Configuration
    "RunConfig",
    "parse_pfq",
    "parse_scalar",
    # Checks
    "Check",
    "CheckContext",
    "run_check",
    "run_checks",
    # Records
    "SCHEMA",
    "CheckReport",
    "CheckRow",
    "EvalRecord",
    "SuiteRecord",
]
