"""Tests for basis elements and generator indices."""

import pytest

from quiver_cohomology.domain.errors.domain_errors import ValidationError
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex, generators


class TestWord:
    """Tests for the normal-form words."""

    @pytest.mark.parametrize(
        ("word", "degree", "position"),
        [(Word.ONE, 0, 0), (Word.X, 1, 1), (Word.Y, 1, 2), (Word.XY, 2, 3)],
    )
    def test_degree_and_position(self, word: Word, degree: int, position: int) -> None:
        assert word.degree == degree
        assert word.position == position

    def test_of_degree(self) -> None:
        assert Word.of_degree(1) == (Word.X, Word.Y)
        assert Word.of_degree(3) == ()


class TestBasisElement:
    """Tests for e_i * word."""

    def test_index_is_vertex_major(self) -> None:
        assert BasisElement(2, Word.Y).index == 10
        assert BasisElement(0, Word.ONE).index == 0

    def test_terminus_wraps(self) -> None:
        assert BasisElement(2, Word.XY).terminus(3) == 1
        assert BasisElement(2, Word.X).terminus(3) == 0
        assert BasisElement(1, Word.ONE).origin() == 1

    def test_str(self) -> None:
        assert str(BasisElement(1, Word.ONE)) == "e1"
        assert str(BasisElement(0, Word.XY)) == "e0xy"


class TestGeneratorIndex:
    """Tests for b^n_{i,j}."""

    def test_str_and_endpoints(self) -> None:
        g = GeneratorIndex(4, 2, 1)
        assert str(g) == "b^4_{2,1}"
        assert g.origin() == 2
        assert g.terminus(3) == 0

    @pytest.mark.parametrize(("n", "i", "j"), [(-1, 0, 0), (2, 0, 3), (2, 0, -1), (1, -1, 0)])
    def test_invalid_indices(self, n: int, i: int, j: int) -> None:
        with pytest.raises(ValidationError):
            GeneratorIndex(n, i, j)

    def test_ordering_is_degree_major(self) -> None:
        unsorted = [GeneratorIndex(2, 0, 0), GeneratorIndex(1, 2, 1), GeneratorIndex(1, 0, 1)]
        assert sorted(unsorted) == [
            GeneratorIndex(1, 0, 1),
            GeneratorIndex(1, 2, 1),
            GeneratorIndex(2, 0, 0),
        ]

    def test_generators_count_and_order(self) -> None:
        gens = generators(2, 3)
        assert len(gens) == 9
        assert gens[0] == GeneratorIndex(2, 0, 0)
        assert gens[3] == GeneratorIndex(2, 1, 0)
