"""Domain protocols."""

from quiver_cohomology.domain.protocols.computation_cache import IComputationCache

__all__ = ["IComputationCache"]
