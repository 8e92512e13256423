"""Application DTOs."""

from quiver_cohomology.application.dtos.cohomology_dtos import (
    TABLE_COLUMNS,
    DimensionRow,
    DimensionTable,
    EulerWindow,
    Provenance,
)
from quiver_cohomology.application.dtos.product_dtos import (
    ProductEntry,
    ProductTable,
    RingCheckReport,
)
from quiver_cohomology.application.dtos.verification_dtos import CheckResult, VerificationSummary

__all__ = [
    "TABLE_COLUMNS",
    "CheckResult",
    "DimensionRow",
    "DimensionTable",
    "EulerWindow",
    "ProductEntry",
    "ProductTable",
    "Provenance",
    "RingCheckReport",
    "VerificationSummary",
]
