"""Computation cache protocol (interface).

Domain services memoize expensive, immutable results (flattened differentials,
hat matrices, lifting chains) through this protocol. The infrastructure layer
decides where and how long they live.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from typing import Any, Protocol, TypeVar, runtime_checkable

T = TypeVar("T")


@runtime_checkable
class IComputationCache(Protocol):
    """Protocol for computation caches (Strategy pattern).

    Implementations must be safe to call from worker threads and must only
    ever return values previously produced by ``factory`` for the same
    ``kind`` and ``params``.
    """

    @property
    def cache_name(self) -> str:
        """Identifier used in log events (e.g. "lru")."""
        ...

    def get_or_compute(
        self,
        kind: str,
        params: Mapping[str, Any],
        factory: Callable[[], T],
    ) -> T:
        """Return the cached value for (kind, params), computing and storing it on a miss."""
        ...
