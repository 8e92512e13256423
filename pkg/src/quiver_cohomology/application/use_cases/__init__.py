"""Application use cases."""

from quiver_cohomology.application.use_cases.check_ring import CheckRingUseCase, RingCheckError
from quiver_cohomology.application.use_cases.compute_dimensions import (
    ComputeDimensionsUseCase,
    DimensionComputationError,
)
from quiver_cohomology.application.use_cases.compute_products import (
    ComputeProductsUseCase,
    ProductComputationError,
)
from quiver_cohomology.application.use_cases.verify_resolution import (
    VerificationError,
    VerifyResolutionUseCase,
    VerifyStatedBasesUseCase,
)

__all__ = [
    "CheckRingUseCase",
    "ComputeDimensionsUseCase",
    "ComputeProductsUseCase",
    "DimensionComputationError",
    "ProductComputationError",
    "RingCheckError",
    "VerificationError",
    "VerifyResolutionUseCase",
    "VerifyStatedBasesUseCase",
]
