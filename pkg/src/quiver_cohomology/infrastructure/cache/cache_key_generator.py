"""Cache key generation for computation results."""

from __future__ import annotations

import hashlib
import json
from typing import Any


def generate_cache_key(kind: str, s: int, characteristic: int, **params: Any) -> str:
    """Generate a deterministic cache key for one computation.

    The key covers the kind of result, the algebra (s, characteristic) and
    every parameter that changes the result. Values must be JSON-serializable.
    """
    data = {
        "kind": kind,
        "s": s,
        "characteristic": characteristic,
        "params": params,
    }

    json_str = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return f"{kind}:" + hashlib.sha256(json_str.encode()).hexdigest()[:24]
