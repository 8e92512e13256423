"""Domain layer - algebra, resolution, cochains and Yoneda products."""

# Common utilities
from quiver_cohomology.domain.common.result import Err, Ok, Result

# Entities
from quiver_cohomology.domain.entities.cochain import Cochain
from quiver_cohomology.domain.entities.quiver_algebra import QuiverAlgebra, build_algebra

# Errors
from quiver_cohomology.domain.errors.domain_errors import (
    CohomologyError,
    ConfigurationError,
    DomainError,
    LiftingError,
    ValidationError,
)

# Protocols (Interfaces)
from quiver_cohomology.domain.protocols.computation_cache import IComputationCache

# Value Objects
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex

__all__ = [
    # Common
    "Result",
    "Ok",
    "Err",
    # Entities
    "Cochain",
    "QuiverAlgebra",
    "build_algebra",
    # Errors
    "DomainError",
    "ValidationError",
    "CohomologyError",
    "LiftingError",
    "ConfigurationError",
    # Protocols
    "IComputationCache",
    # Value Objects
    "FieldSpec",
    "GeneratorIndex",
]
