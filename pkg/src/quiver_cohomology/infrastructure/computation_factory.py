"""Factory wiring algebras, resolutions, cochain complexes and product calculators."""

from __future__ import annotations

import threading
from typing import TYPE_CHECKING

import structlog

from quiver_cohomology.config.settings import get_settings
from quiver_cohomology.domain.entities.quiver_algebra import QuiverAlgebra, build_algebra
from quiver_cohomology.domain.services.cochains import CochainComplex
from quiver_cohomology.domain.services.resolution import MinimalResolution, SignRule
from quiver_cohomology.domain.services.yoneda import YonedaCalculator
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec
from quiver_cohomology.infrastructure.cache.computation_cache import ComputationCache

if TYPE_CHECKING:
    from quiver_cohomology.config.settings import Settings

logger = structlog.get_logger()


class ComputationFactory:
    """Builds (and reuses) the domain services for one (s, characteristic) pair.

    All services built for the same pair share one resolution and one cache,
    so matrices computed by one use case are reused by the next.
    """

    def __init__(
        self,
        settings: Settings | None = None,
        cache: ComputationCache | None = None,
    ) -> None:
        self._settings = settings or get_settings()
        if cache is None and self._settings.cache_enabled:
            cache = ComputationCache(max_size=self._settings.cache_max_size)
        self._cache = cache
        self._lock = threading.Lock()
        self._complexes: dict[tuple[int, int], CochainComplex] = {}
        self._calculators: dict[tuple[int, int], YonedaCalculator] = {}
        self._logger = logger.bind(component="computation_factory")

    @property
    def cache(self) -> ComputationCache | None:
        return self._cache

    def create_algebra(self, s: int, characteristic: int) -> QuiverAlgebra:
        return build_algebra(s, FieldSpec.of(characteristic))

    def create_resolution(
        self, s: int, characteristic: int, sign_rule: SignRule | None = None
    ) -> MinimalResolution:
        """A fresh resolution; a custom sign rule never shares the cache."""
        if sign_rule is None:
            return self.create_complex(s, characteristic).resolution
        return MinimalResolution(self.create_algebra(s, characteristic), sign_rule=sign_rule)

    def create_complex(self, s: int, characteristic: int) -> CochainComplex:
        key = (s, characteristic)
        with self._lock:
            found = self._complexes.get(key)
            if found is None:
                resolution = MinimalResolution(
                    self.create_algebra(s, characteristic), cache=self._cache
                )
                found = CochainComplex(resolution, cache=self._cache)
                self._complexes[key] = found
                self._logger.info("complex_created", s=s, characteristic=characteristic)
            return found

    def create_calculator(self, s: int, characteristic: int) -> YonedaCalculator:
        key = (s, characteristic)
        complex_ = self.create_complex(s, characteristic)
        with self._lock:
            found = self._calculators.get(key)
            if found is None:
                found = YonedaCalculator(
                    complex_,
                    cache=self._cache,
                    steps_margin=self._settings.lifting_steps_margin,
                    nilpotence_max_power=self._settings.nilpotence_max_power,
                )
                self._calculators[key] = found
            return found
