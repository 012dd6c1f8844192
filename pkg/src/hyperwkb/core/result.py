"""Result type for checks that report failure instead of raising."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Generic, TypeGuard, TypeVar

T = TypeVar("T")
E = TypeVar("E")
U = TypeVar("U")


@dataclass(frozen=True, slots=True)
class Ok(Generic[T]):
    """A passing check or successful evaluation."""

    value: T


@dataclass(frozen=True, slots=True)
class Err(Generic[E]):
    """A failed check carrying its failure record."""

    error: E


Result = Ok[T] | Err[E]


def is_ok(result: Result[T, E]) -> TypeGuard[Ok[T]]:
    return isinstance(result, Ok)


def is_err(result: Result[T, E]) -> TypeGuard[Err[E]]:
    return isinstance(result, Err)


def fold(result: Result[T, E], on_ok: Callable[[T], U], on_err: Callable[[E], U]) -> U:
    """Collapse both arms into one type, e.g. a report row."""
    if isinstance(result, Ok):
        return on_ok(result.value)
    return on_err(result.error)


def count_ok(results: Iterable[Result[T, E]]) -> tuple[int, int]:
    """(passed, total)."""
    passed = total = 0
    for r in results:
        total += 1
        passed += isinstance(r, Ok)
    return passed, total
