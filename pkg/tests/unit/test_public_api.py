"""Tests for public API exports."""

import importlib

import pytest

SUBPACKAGES = [
    "hyperwkb.core",
    "hyperwkb.special",
    "hyperwkb.series",
    "hyperwkb.opcore",
    "hyperwkb.frobenius",
    "hyperwkb.wkb",
    "hyperwkb.integralrep",
    "hyperwkb.variations",
    "hyperwkb.mzvgen",
    "hyperwkb.cli",
]


def test_main_package_exports_series_api() -> None:
    """Main package exports parameters, pFq evaluation and MZVs."""
    from hyperwkb import HyperParams, MZVIndex, multi_polylog, mzv, pfq_eval, pfq_series

    assert HyperParams is not None
    assert MZVIndex is not None
    assert pfq_eval is not None
    assert pfq_series is not None
    assert mzv is not None
    assert multi_polylog is not None


def test_main_package_exports_generating_functions() -> None:
    """Main package exports the MZV generating functions."""
    from hyperwkb import delta2, delta3, identity_522, u1_at_one

    assert delta2 is not None
    assert delta3 is not None
    assert u1_at_one is not None
    assert identity_522 is not None


def test_main_package_exports_result_types() -> None:
    """Main package exports Result types."""
    from hyperwkb import Err, Ok, Result, is_err, is_ok

    assert Ok is not None
    assert Err is not None
    assert Result is not None
    assert is_ok is not None
    assert is_err is not None


def test_main_package_exports_exceptions_and_settings() -> None:
    """Main package exports the error root and the settings loader."""
    from hyperwkb import HyperwkbError, ParameterError, Settings, load_settings

    assert issubclass(ParameterError, HyperwkbError)
    assert Settings is not None
    assert load_settings is not None


def test_main_package_exports_version() -> None:
    """Main package exports version string."""
    from hyperwkb import __version__

    assert isinstance(__version__, str)
    assert __version__ == "0.1.0"


def test_core_module_exports() -> None:
    """Core module exports its public API."""
    from hyperwkb.core import NumericDomainError, Ok, UsageError, to_domain_error

    assert Ok is not None
    assert NumericDomainError is not None
    assert UsageError is not None
    assert to_domain_error is not None


@pytest.mark.parametrize("name", SUBPACKAGES)
def test_subpackage_all_resolves(name: str) -> None:
    """Every name listed in a subpackage's __all__ is importable from it."""
    module = importlib.import_module(name)
    missing = [n for n in module.__all__ if not hasattr(module, n)]
    assert missing == []
