"""Result type used at the application boundary.

Use cases report expected failures (a bad degree, an unsolvable lifting)
as ``Err`` values instead of raising, so the CLI can map them to exit codes.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, TypeVar

T = TypeVar("T")
U = TypeVar("U")
E = TypeVar("E", bound=Exception)


@dataclass(frozen=True, slots=True)
class Ok(Generic[T]):
    """Successful outcome."""

    value: T

    def is_ok(self) -> bool:
        return True

    def is_err(self) -> bool:
        return False


@dataclass(frozen=True, slots=True)
class Err(Generic[E]):
    """Failed outcome carrying the error."""

    error: E

    def is_ok(self) -> bool:
        return False

    def is_err(self) -> bool:
        return True


Result = Ok[T] | Err[E]


def unwrap(result: Result[T, E]) -> T:
    """Return the value of an Ok, raise the error of an Err."""
    match result:
        case Ok(value):
            return value
        case Err(error):
            raise error


def map_result(result: Result[T, E], fn: Callable[[T], U]) -> Result[U, E]:
    """Apply ``fn`` to the value of an Ok; pass an Err through."""
    match result:
        case Ok(value):
            return Ok(fn(value))
        case Err() as err:
            return err


def collect_results(results: list[Result[T, E]]) -> Result[list[T], E]:
    """Turn a list of Results into a Result of a list.

    The first Err wins; otherwise all values are returned in order.
    """
    values: list[T] = []
    for result in results:
        match result:
            case Ok(value):
                values.append(value)
            case Err() as err:
                return err
    return Ok(values)
