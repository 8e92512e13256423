"""In-memory LRU cache for immutable computation results."""

from __future__ import annotations

import threading
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any, TypeVar

import structlog
from cachetools import LRUCache

from quiver_cohomology.infrastructure.cache.cache_key_generator import generate_cache_key

logger = structlog.get_logger()

T = TypeVar("T")

_MISSING = object()


@dataclass
class CacheStats:
    """Cache statistics for monitoring."""

    hits: int = 0
    misses: int = 0
    size: int = 0
    max_size: int = 0

    @property
    def hit_rate(self) -> float:
        total = self.hits + self.misses
        return (self.hits / total * 100) if total > 0 else 0.0


class ComputationCache:
    """Thread-safe LRU memo of matrices, ranks and lifting chains.

    Implements the IComputationCache protocol. Factories run outside the lock,
    so two threads missing the same key may both compute it; the first stored
    value wins and is returned to both.
    """

    def __init__(self, max_size: int = 4096) -> None:
        self._cache: LRUCache[str, Any] = LRUCache(maxsize=max_size)
        self._max_size = max_size
        self._lock = threading.RLock()
        self._hits = 0
        self._misses = 0
        self._logger = logger.bind(component="computation_cache")

    @property
    def cache_name(self) -> str:
        return "lru"

    @staticmethod
    def key_for(kind: str, params: Mapping[str, Any]) -> str:
        values = dict(params)
        s = int(values.pop("s", 0))
        characteristic = int(values.pop("characteristic", 0))
        return generate_cache_key(kind, s, characteristic, **values)

    def get(self, key: str) -> Any | None:
        """Retrieve a value, or None if absent."""
        with self._lock:
            value = self._cache.get(key, _MISSING)
            if value is _MISSING:
                self._misses += 1
                return None
            self._hits += 1
            return value

    def set(self, key: str, value: Any) -> None:
        with self._lock:
            self._cache[key] = value

    def get_or_compute(
        self,
        kind: str,
        params: Mapping[str, Any],
        factory: Callable[[], T],
    ) -> T:
        key = self.key_for(kind, params)
        with self._lock:
            found = self._cache.get(key, _MISSING)
            if found is not _MISSING:
                self._hits += 1
                self._logger.debug("cache_hit", kind=kind, key=key)
                return found  # type: ignore[no-any-return]
            self._misses += 1
        self._logger.debug("cache_miss", kind=kind, key=key)

        value = factory()

        with self._lock:
            stored = self._cache.get(key, _MISSING)
            if stored is not _MISSING:
                return stored  # type: ignore[no-any-return]
            self._cache[key] = value
        return value

    def clear(self) -> int:
        """Clear all entries, returns count of cleared items."""
        with self._lock:
            count = len(self._cache)
            self._cache.clear()
        self._logger.info("cache_cleared", entries=count)
        return count

    def get_stats(self) -> CacheStats:
        with self._lock:
            return CacheStats(
                hits=self._hits,
                misses=self._misses,
                size=len(self._cache),
                max_size=self._max_size,
            )
