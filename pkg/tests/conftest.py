"""Pytest configuration and shared fixtures."""

import os
from collections.abc import Generator
from unittest.mock import MagicMock

import pytest
import structlog

# Set test environment variables before importing settings
os.environ.setdefault("QUIVER_COHOMOLOGY_LOG_LEVEL", "DEBUG")
os.environ.setdefault("QUIVER_COHOMOLOGY_CACHE_ENABLED", "false")
os.environ.setdefault("QUIVER_COHOMOLOGY_MAX_CONCURRENCY", "2")

from quiver_cohomology.config.logging_config import configure_logging  # noqa: E402
from quiver_cohomology.config.settings import Settings, get_settings  # noqa: E402
from quiver_cohomology.domain.entities.quiver_algebra import (  # noqa: E402
    QuiverAlgebra,
    build_algebra,
)
from quiver_cohomology.domain.services.cochains import CochainComplex  # noqa: E402
from quiver_cohomology.domain.services.resolution import MinimalResolution  # noqa: E402
from quiver_cohomology.domain.services.yoneda import YonedaCalculator  # noqa: E402
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec  # noqa: E402
from quiver_cohomology.infrastructure.cache.computation_cache import (  # noqa: E402
    ComputationCache,
)
from quiver_cohomology.infrastructure.computation_factory import (  # noqa: E402
    ComputationFactory,
)


configure_logging(level="DEBUG")


@pytest.fixture(autouse=True)
def _restore_logging() -> Generator[None, None, None]:
    """Put logging back to the test configuration after every test."""
    yield
    structlog.reset_defaults()
    configure_logging(level="DEBUG")


@pytest.fixture(scope="session")
def anyio_backend() -> str:
    """Configure anyio to use asyncio backend."""
    return "asyncio"


@pytest.fixture
def mock_settings() -> Generator[MagicMock, None, None]:
    """Provide mock settings for testing."""
    get_settings.cache_clear()

    mock = MagicMock(spec=Settings)
    mock.log_level = "DEBUG"
    mock.log_format = "console"
    mock.cache_enabled = False
    mock.cache_max_size = 128
    mock.max_concurrency = 2
    mock.default_characteristic = 0
    mock.default_output_format = "text"
    mock.recursion_check_max_degree = 8
    mock.presentation_max_power = 2
    mock.nilpotence_max_power = 3
    mock.lifting_steps_margin = 0

    yield mock

    get_settings.cache_clear()


@pytest.fixture
def test_settings() -> Generator[Settings, None, None]:
    """Provide a real settings instance with test values."""
    get_settings.cache_clear()

    settings = Settings(
        log_level="DEBUG",
        cache_enabled=True,
        cache_max_size=512,
        max_concurrency=2,
        recursion_check_max_degree=8,
        presentation_max_power=2,
    )

    yield settings

    get_settings.cache_clear()


@pytest.fixture
def factory(test_settings: Settings) -> ComputationFactory:
    """Factory with its own LRU cache."""
    return ComputationFactory(test_settings, cache=ComputationCache(max_size=512))


@pytest.fixture(scope="session")
def qq() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def gf2() -> FieldSpec:
    return FieldSpec.prime(2)


@pytest.fixture(scope="session")
def gf3() -> FieldSpec:
    return FieldSpec.prime(3)


@pytest.fixture(scope="session")
def algebra_s3(qq: FieldSpec) -> QuiverAlgebra:
    return build_algebra(3, qq)


@pytest.fixture(scope="session")
def resolution_s3(algebra_s3: QuiverAlgebra) -> MinimalResolution:
    return MinimalResolution(algebra_s3)


@pytest.fixture(scope="session")
def complex_s3(resolution_s3: MinimalResolution) -> CochainComplex:
    """Cochain complex for s = 3 over QQ, shared across the session."""
    return CochainComplex(resolution_s3)


@pytest.fixture(scope="session")
def complex_s3_gf2(gf2: FieldSpec) -> CochainComplex:
    return CochainComplex(MinimalResolution(build_algebra(3, gf2)))


@pytest.fixture(scope="session")
def complex_s4(qq: FieldSpec) -> CochainComplex:
    return CochainComplex(MinimalResolution(build_algebra(4, qq)))


@pytest.fixture(scope="session")
def calculator_s3(complex_s3: CochainComplex) -> YonedaCalculator:
    return YonedaCalculator(complex_s3)


@pytest.fixture(scope="session")
def calculator_s3_gf2(complex_s3_gf2: CochainComplex) -> YonedaCalculator:
    return YonedaCalculator(complex_s3_gf2)


@pytest.fixture(scope="session")
def calculator_s4(complex_s4: CochainComplex) -> YonedaCalculator:
    return YonedaCalculator(complex_s4)
