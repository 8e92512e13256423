"""Tests for the minimal bimodule resolution and the uniform elements."""

import itertools

import pytest

from quiver_cohomology.domain.entities.bimodule import BimoduleElement
from quiver_cohomology.domain.entities.g_element import GElement
from quiver_cohomology.domain.entities.quiver_algebra import QuiverAlgebra, build_algebra
from quiver_cohomology.domain.errors.domain_errors import ValidationError
from quiver_cohomology.domain.services.resolution import (
    MinimalResolution,
    expansion_is_full_binomial,
    g_set,
    one_sided_differential_coefficients,
    standard_sign,
    uniform_endpoints,
    verify_left_recursion,
    verify_one_sided_coefficients,
)
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex


class TestGSet:
    """The uniform elements g^n_{i,j}."""

    def test_size(self) -> None:
        assert len(g_set(4, 3)) == 15

    def test_low_degrees(self) -> None:
        g0 = g_set(0, 2)
        assert [g.expansion for g in g0] == [{"": 1}, {"": 1}]
        g1 = g_set(1, 1)
        assert g1[0].expansion == {"y": 1}
        assert g1[1].expansion == {"x": 1}

    def test_degree_two_mixes_words(self) -> None:
        middle = g_set(2, 1)[1]
        assert middle.expansion == {"xy": 1, "yx": 1}

    @pytest.mark.parametrize("n", range(0, 8))
    def test_full_binomial_and_uniform(self, n: int) -> None:
        for g in g_set(n, 3):
            assert expansion_is_full_binomial(g)
            assert uniform_endpoints(g, 3)

    def test_missing_word_is_not_full_binomial(self) -> None:
        g = g_set(3, 2)[1]
        assert not expansion_is_full_binomial(g.without_word(g.words()[0]))

    def test_rejects_invalid_degree(self) -> None:
        with pytest.raises(ValidationError):
            g_set(-1, 3)


class TestRecursions:
    """Both recursions generate the same elements."""

    @pytest.mark.parametrize(("n", "s"), list(itertools.product(range(1, 13), range(1, 5))))
    def test_left_recursion_holds(self, n: int, s: int) -> None:
        assert verify_left_recursion(n, s)

    def test_left_recursion_detects_tampering(self) -> None:
        elements = g_set(3, 3)
        broken = elements[1]
        elements[1] = GElement(broken.n, broken.i, broken.j, {**broken.expansion, "xxx": 2})
        assert not verify_left_recursion(3, 3, elements)

    def test_left_recursion_detects_missing_element(self) -> None:
        assert not verify_left_recursion(2, 3, g_set(2, 3)[:-1])

    def test_left_recursion_starts_at_one(self) -> None:
        with pytest.raises(ValidationError):
            verify_left_recursion(0, 3)

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_one_sided_coefficients(self, n: int) -> None:
        assert verify_one_sided_coefficients(n, 3)

    def test_one_sided_coefficients_are_arrows(self) -> None:
        coefficients = one_sided_differential_coefficients(2, 3)
        terms = coefficients[GeneratorIndex(2, 1, 1)]
        assert terms == [
            (GeneratorIndex(1, 1, 0), BasisElement(2, Word.X)),
            (GeneratorIndex(1, 1, 1), BasisElement(2, Word.Y)),
        ]


class TestDifferential:
    """Shape and terms of d^n."""

    def test_standard_sign(self) -> None:
        assert [standard_sign(n) for n in range(4)] == [1, -1, 1, -1]

    def test_dimension(self, resolution_s3: MinimalResolution) -> None:
        assert resolution_s3.dimension(2) == 144
        assert resolution_s3.tensor_basis(2).dimension == 144

    def test_first_differential(self, resolution_s3: MinimalResolution) -> None:
        image = resolution_s3.differential(1).image(GeneratorIndex(1, 0, 1))
        one = resolution_s3.algebra.field.one
        assert image.terms == {
            (GeneratorIndex(0, 0, 0), BasisElement(0, Word.ONE), BasisElement(0, Word.X)): one,
            (GeneratorIndex(0, 1, 0), BasisElement(0, Word.X), BasisElement(1, Word.ONE)): -one,
        }

    def test_images_lie_in_radical(self, resolution_s3: MinimalResolution) -> None:
        for n in range(1, 5):
            d = resolution_s3.differential(n)
            assert all(d.image(g).is_in_radical() for g in resolution_s3.generators(n))

    def test_differential_index_starts_at_one(self, resolution_s3: MinimalResolution) -> None:
        with pytest.raises(ValidationError):
            resolution_s3.differential(0)

    def test_differential_is_memoized(self, resolution_s3: MinimalResolution) -> None:
        assert resolution_s3.differential(3) is resolution_s3.differential(3)

    def test_augmentation(self, resolution_s3: MinimalResolution) -> None:
        algebra = resolution_s3.algebra
        g = BimoduleElement.generator(algebra, GeneratorIndex(0, 1, 0))
        assert resolution_s3.augmentation(g) == algebra.idempotent(1)
        assert resolution_s3.augmentation_matrix().shape == (12, 48)

    def test_augmentation_needs_degree_zero(self, resolution_s3: MinimalResolution) -> None:
        g = BimoduleElement.generator(resolution_s3.algebra, GeneratorIndex(1, 0, 0))
        with pytest.raises(ValidationError):
            resolution_s3.augmentation(g)

    def test_flatten_matches_apply(self, resolution_s3: MinimalResolution) -> None:
        d2 = resolution_s3.differential(2)
        matrix = resolution_s3.differential_matrix(2)
        source = resolution_s3.tensor_basis(2)
        target = resolution_s3.tensor_basis(1)
        key = source.elements[5]
        element = BimoduleElement(resolution_s3.algebra, 2, {key: 1})
        assert d2.apply(element).coordinates(target) == matrix.column(5)


class TestVerification:
    """Complex, exactness and minimality checks."""

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_complex(self, s: int, qq: FieldSpec) -> None:
        report = MinimalResolution(build_algebra(s, qq)).verify_complex(5)
        assert report.passed
        assert report.checked_composites == 6
        assert report.first_failure is None

    def test_complex_in_characteristic_two(self, gf2: FieldSpec) -> None:
        assert MinimalResolution(build_algebra(4, gf2)).verify_complex(6).passed

    def test_wrong_sign_rule_fails_at_degree_two(self, algebra_s3: QuiverAlgebra) -> None:
        broken = MinimalResolution(algebra_s3, sign_rule=lambda n: -1)
        assert not broken.is_standard
        report = broken.verify_complex(4)
        assert not report.passed
        assert report.first_failure is not None
        assert report.first_failure.n == 2

    def test_wrong_sign_rule_is_invisible_in_characteristic_two(self, gf2: FieldSpec) -> None:
        broken = MinimalResolution(build_algebra(3, gf2), sign_rule=lambda n: -1)
        assert broken.verify_complex(4).passed

    @pytest.mark.parametrize(("s", "characteristic"), [(1, 0), (2, 0), (3, 0), (3, 2), (4, 3)])
    def test_exact_and_minimal(self, s: int, characteristic: int) -> None:
        resolution = MinimalResolution(build_algebra(s, FieldSpec.of(characteristic)))
        report = resolution.verify_exact_and_minimal(5)
        assert report.exact
        assert report.minimal
        assert report.ranks[0] == 4 * s
        assert report.dimensions[5] == 96 * s

    @pytest.mark.slow
    @pytest.mark.parametrize("characteristic", [0, 2, 3])
    @pytest.mark.parametrize("s", [1, 2, 3, 4, 5, 6])
    def test_exact_and_minimal_through_two_periods(self, s: int, characteristic: int) -> None:
        max_degree = 2 * s + 4
        resolution = MinimalResolution(build_algebra(s, FieldSpec.of(characteristic)))
        report = resolution.verify_exact_and_minimal(max_degree)
        assert report.exact, report.first_inexact_degree
        assert report.minimal, report.first_non_minimal
        for n in range(max_degree + 1):
            assert report.dimensions[n] == 16 * s * (n + 1)

    def test_exactness_rank_identity(self, resolution_s3: MinimalResolution) -> None:
        report = resolution_s3.verify_exact_and_minimal(4)
        for n in range(1, 4):
            assert report.ranks[n] + report.ranks[n + 1] == report.dimensions[n]

    def test_precomputed_ranks_are_used(self, resolution_s3: MinimalResolution) -> None:
        report = resolution_s3.verify_exact_and_minimal(3, ranks={0: 12, 1: 36, 2: 59, 3: 84})
        assert report.first_inexact_degree == 1

    def test_verify_requires_small_degree_bounds(self, resolution_s3: MinimalResolution) -> None:
        with pytest.raises(ValidationError):
            resolution_s3.verify_complex(0)
        with pytest.raises(ValidationError):
            resolution_s3.verify_exact_and_minimal(1)
