"""Infrastructure cache - Caching implementations."""

from quiver_cohomology.infrastructure.cache.cache_key_generator import generate_cache_key
from quiver_cohomology.infrastructure.cache.computation_cache import CacheStats, ComputationCache

__all__ = ["ComputationCache", "CacheStats", "generate_cache_key"]
