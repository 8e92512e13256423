"""Domain entities."""

from quiver_cohomology.domain.entities.bimodule import (
    BimoduleElement,
    BimoduleMap,
    TensorBasis,
    TensorKey,
)
from quiver_cohomology.domain.entities.cochain import WORD_NAMES, Cochain, sum_cochains
from quiver_cohomology.domain.entities.g_element import GElement
from quiver_cohomology.domain.entities.lifting import LiftingChain, RingPresentation
from quiver_cohomology.domain.entities.quiver_algebra import (
    AlgebraElement,
    Arrow,
    CircularQuiver,
    QuiverAlgebra,
    build_algebra,
)
from quiver_cohomology.domain.entities.verification import (
    ComplexReport,
    ExactnessReport,
    FamilyCheck,
    GeneratorFailure,
    HomologyDimensions,
    NilpotenceReport,
    NilpotenceSample,
    OracleComparison,
    PresentationReport,
    ProductCheck,
    StatedBasisReport,
)

__all__ = [
    "WORD_NAMES",
    "AlgebraElement",
    "Arrow",
    "BimoduleElement",
    "BimoduleMap",
    "CircularQuiver",
    "Cochain",
    "ComplexReport",
    "ExactnessReport",
    "FamilyCheck",
    "GElement",
    "GeneratorFailure",
    "HomologyDimensions",
    "LiftingChain",
    "NilpotenceReport",
    "NilpotenceSample",
    "OracleComparison",
    "PresentationReport",
    "ProductCheck",
    "QuiverAlgebra",
    "RingPresentation",
    "StatedBasisReport",
    "TensorBasis",
    "TensorKey",
    "build_algebra",
    "sum_cochains",
]
