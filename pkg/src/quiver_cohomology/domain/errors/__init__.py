"""Domain errors."""

from quiver_cohomology.domain.errors.domain_errors import (
    CohomologyError,
    ConfigurationError,
    DimensionMismatchError,
    DomainError,
    FormulaRangeError,
    IncompatibleOperandsError,
    LiftingError,
    NotACocycleError,
    ResolutionError,
    ValidationError,
)

__all__ = [
    "CohomologyError",
    "ConfigurationError",
    "DimensionMismatchError",
    "DomainError",
    "FormulaRangeError",
    "IncompatibleOperandsError",
    "LiftingError",
    "NotACocycleError",
    "ResolutionError",
    "ValidationError",
]
