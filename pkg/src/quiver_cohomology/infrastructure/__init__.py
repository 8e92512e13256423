"""Infrastructure layer - caching and wiring of computation services."""

from quiver_cohomology.infrastructure.cache import CacheStats, ComputationCache, generate_cache_key
from quiver_cohomology.infrastructure.computation_factory import ComputationFactory

__all__ = ["CacheStats", "ComputationCache", "ComputationFactory", "generate_cache_key"]
