"""Application layer - Use cases and DTOs."""

from quiver_cohomology.application.dtos import (
    CheckResult,
    DimensionRow,
    DimensionTable,
    EulerWindow,
    ProductEntry,
    ProductTable,
    RingCheckReport,
    VerificationSummary,
)
from quiver_cohomology.application.use_cases import (
    CheckRingUseCase,
    ComputeDimensionsUseCase,
    ComputeProductsUseCase,
    DimensionComputationError,
    ProductComputationError,
    RingCheckError,
    VerificationError,
    VerifyResolutionUseCase,
    VerifyStatedBasesUseCase,
)

__all__ = [
    # DTOs
    "CheckResult",
    "DimensionRow",
    "DimensionTable",
    "EulerWindow",
    "ProductEntry",
    "ProductTable",
    "RingCheckReport",
    "VerificationSummary",
    # Use Cases
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
