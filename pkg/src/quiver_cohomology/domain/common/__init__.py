"""Common domain utilities."""

from quiver_cohomology.domain.common.memo import LocalMemo
from quiver_cohomology.domain.common.result import (
    Err,
    Ok,
    Result,
    collect_results,
    map_result,
    unwrap,
)

__all__ = ["Err", "LocalMemo", "Ok", "Result", "collect_results", "map_result", "unwrap"]
