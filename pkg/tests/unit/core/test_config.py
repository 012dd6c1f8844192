"""Tests for environment settings."""

import pytest
from pydantic import ValidationError

from hyperwkb.core.config import DEFAULT_MAX_ORDER, Settings, load_settings
from hyperwkb.core.errors import ParameterError


def test_defaults() -> None:
    settings = load_settings({})
    assert settings.threads == 1
    assert settings.log_level == "WARNING"
    assert settings.max_order == DEFAULT_MAX_ORDER


def test_reads_environment() -> None:
    settings = load_settings({"HYPERWKB_THREADS": "4", "HYPERWKB_LOG_LEVEL": "debug"})
    assert settings.threads == 4
    assert settings.log_level == "DEBUG"


def test_empty_values_fall_back() -> None:
    assert load_settings({"HYPERWKB_THREADS": ""}).threads == 1


@pytest.mark.parametrize("value", ["0", "many"])
def test_invalid_threads(value: str) -> None:
    with pytest.raises(ParameterError) as exc:
        load_settings({"HYPERWKB_THREADS": value})
    assert exc.value.field == "HYPERWKB_THREADS"


def test_invalid_log_level() -> None:
    with pytest.raises(ParameterError) as exc:
        load_settings({"HYPERWKB_LOG_LEVEL": "loud"})
    assert exc.value.field == "HYPERWKB_LOG_LEVEL"


def test_settings_are_frozen() -> None:
    settings = Settings()
    with pytest.raises(ValidationError):
        settings.threads = 8  # type: ignore[misc]
