"""Runtime settings read from the environment."""

from __future__ import annotations

import os
from collections.abc import Mapping
from typing import Literal

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from hyperwkb.core.errors import ParameterError

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ORDER = 200


class Settings(BaseModel, frozen=True):
    """Process-wide knobs."""

    threads: int = Field(default=1, ge=1)
    log_level: LogLevel = "WARNING"
    default_tol: float = Field(default=DEFAULT_TOL, gt=0.0)
    max_order: int = Field(default=DEFAULT_MAX_ORDER, ge=1)


_ENV_FIELDS = {
    "HYPERWKB_THREADS": "threads",
    "HYPERWKB_LOG_LEVEL": "log_level",
}


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    """Build settings from HYPERWKB_* environment variables."""
    env = os.environ if environ is None else environ
    values: dict[str, str] = {}
    for var, field in _ENV_FIELDS.items():
        raw = env.get(var)
        if raw is not None and raw != "":
            values[field] = raw.upper() if field == "log_level" else raw
    try:
        return Settings.model_validate(values)
    except PydanticValidationError as e:
        bad = str(e.errors()[0]["loc"][0])
        var = next(k for k, v in _ENV_FIELDS.items() if v == bad)
        raise ParameterError(f"Invalid value for {var}: {values.get(bad)!r}", field=var) from e
