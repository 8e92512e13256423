"""Per-instance memo satisfying the computation cache protocol."""

from __future__ import annotations

import json
import threading
from collections.abc import Callable, Mapping
from typing import Any, TypeVar

T = TypeVar("T")


class LocalMemo:
    """Unbounded dictionary memo owned by a single service instance.

    Used when no shared cache is injected, and always for resolutions built
    with a non-standard sign rule, whose results must not leak into a shared cache.
    """

    def __init__(self) -> None:
        self._store: dict[str, Any] = {}
        self._lock = threading.RLock()

    @property
    def cache_name(self) -> str:
        return "local"

    def get_or_compute(self, kind: str, params: Mapping[str, Any], factory: Callable[[], T]) -> T:
        key = kind + json.dumps(dict(params), sort_keys=True)
        with self._lock:
            if key in self._store:
                return self._store[key]  # type: ignore[no-any-return]
        value = factory()
        with self._lock:
            return self._store.setdefault(key, value)  # type: ignore[no-any-return]

    def __len__(self) -> int:
        return len(self._store)
