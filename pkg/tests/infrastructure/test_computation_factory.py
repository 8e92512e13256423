"""Tests for ComputationFactory."""

from unittest.mock import MagicMock

from quiver_cohomology.config.settings import Settings
from quiver_cohomology.infrastructure.cache.computation_cache import ComputationCache
from quiver_cohomology.infrastructure.computation_factory import ComputationFactory


class TestComputationFactory:
    """Services are built once per (s, characteristic) and share a cache."""

    def test_complex_is_reused(self, factory: ComputationFactory) -> None:
        assert factory.create_complex(3, 0) is factory.create_complex(3, 0)
        assert factory.create_complex(3, 0) is not factory.create_complex(3, 2)

    def test_calculator_shares_complex(self, factory: ComputationFactory) -> None:
        calculator = factory.create_calculator(3, 2)
        assert calculator.complex is factory.create_complex(3, 2)
        assert calculator is factory.create_calculator(3, 2)

    def test_standard_resolution_is_shared(self, factory: ComputationFactory) -> None:
        resolution = factory.create_resolution(3, 0)
        assert resolution is factory.create_complex(3, 0).resolution
        assert resolution.is_standard

    def test_custom_sign_rule_gets_fresh_resolution(self, factory: ComputationFactory) -> None:
        broken = factory.create_resolution(3, 0, sign_rule=lambda n: -1)
        assert not broken.is_standard
        assert broken is not factory.create_resolution(3, 0)
        assert not broken.verify_complex(2).passed

    def test_results_land_in_shared_cache(self, factory: ComputationFactory) -> None:
        factory.create_complex(3, 0).hat_rank(1)
        assert factory.cache is not None
        assert factory.cache.get_stats().size > 0

    def test_cache_disabled_by_settings(self, mock_settings: MagicMock) -> None:
        factory = ComputationFactory(mock_settings)
        assert factory.cache is None
        assert factory.create_complex(3, 0).hh_dimension_computed(0).dim_hh == 1

    def test_cache_created_from_settings(self) -> None:
        settings = Settings(cache_enabled=True, cache_max_size=32)
        factory = ComputationFactory(settings)
        assert isinstance(factory.cache, ComputationCache)
        assert factory.cache.get_stats().max_size == 32
