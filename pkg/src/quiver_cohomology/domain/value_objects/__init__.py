"""Domain value objects."""

from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex, generators

__all__ = ["BasisElement", "FieldSpec", "GeneratorIndex", "Word", "generators"]
