"""Domain services: exact linear algebra, the resolution, cochains and products."""

from quiver_cohomology.domain.services.closed_forms import (
    SignConvention,
    branch_label,
    cohomology_family,
    decompose_degree,
    hh_dimension_formula,
    im_ker_dimension_formula,
    image_family,
    is_regular,
    kernel_family,
    verify_stated_bases,
)
from quiver_cohomology.domain.services.cochains import CochainComplex
from quiver_cohomology.domain.services.exact_linalg import Matrix, kernel_basis, rank, solve
from quiver_cohomology.domain.services.resolution import (
    MinimalResolution,
    g_set,
    one_sided_differential_coefficients,
    verify_left_recursion,
)
from quiver_cohomology.domain.services.yoneda import (
    YonedaCalculator,
    generator_degree,
    presentation_case,
)

__all__ = [
    "CochainComplex",
    "Matrix",
    "MinimalResolution",
    "SignConvention",
    "YonedaCalculator",
    "branch_label",
    "cohomology_family",
    "decompose_degree",
    "g_set",
    "generator_degree",
    "hh_dimension_formula",
    "im_ker_dimension_formula",
    "image_family",
    "is_regular",
    "kernel_basis",
    "kernel_family",
    "one_sided_differential_coefficients",
    "presentation_case",
    "rank",
    "solve",
    "verify_left_recursion",
    "verify_stated_bases",
]
