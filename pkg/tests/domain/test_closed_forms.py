"""Tests for the closed-form dimensions and the listed basis families."""

import pytest

from quiver_cohomology.domain.entities.quiver_algebra import build_algebra
from quiver_cohomology.domain.errors.domain_errors import FormulaRangeError, ValidationError
from quiver_cohomology.domain.services.closed_forms import (
    SignConvention,
    branch_label,
    cohomology_family,
    decompose_degree,
    hh_dimension_formula,
    im_ker_dimension_formula,
    image_family,
    image_sign,
    is_regular,
    kernel_family,
    verify_stated_bases,
)
from quiver_cohomology.domain.services.cochains import CochainComplex
from quiver_cohomology.domain.services.resolution import MinimalResolution
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec


class TestDecomposition:
    """n = m*s + r."""

    def test_decompose(self) -> None:
        d = decompose_degree(14, 4)
        assert (d.m, d.r, d.ms) == (3, 2, 12)

    def test_rejects_negative_degree(self) -> None:
        with pytest.raises(ValidationError):
            decompose_degree(-1, 3)

    @pytest.mark.parametrize(
        ("m", "s", "characteristic", "expected"),
        [(1, 3, 0, False), (2, 3, 0, True), (1, 4, 0, True), (1, 3, 2, True), (1, 5, 3, False)],
    )
    def test_is_regular(self, m: int, s: int, characteristic: int, expected: bool) -> None:
        assert is_regular(m, s, FieldSpec.of(characteristic)) is expected


class TestFormulas:
    """Dimension formulas for s >= 3."""

    def test_hh_s3_rationals(self, qq: FieldSpec) -> None:
        dims = [hh_dimension_formula(n, 3, qq) for n in range(10)]
        assert dims == [1, 4, 3, 0, 0, 0, 7, 16, 9, 0]

    def test_hh_s3_characteristic_two(self, gf2: FieldSpec) -> None:
        assert [hh_dimension_formula(n, 3, gf2) for n in range(6)] == [1, 4, 3, 4, 10, 6]

    def test_hh_s4_vanishing_residue(self, qq: FieldSpec) -> None:
        assert [hh_dimension_formula(n, 4, qq) for n in range(8)] == [1, 4, 3, 0, 5, 12, 7, 0]

    @pytest.mark.parametrize("n", range(10))
    def test_im_plus_ker_is_hom_dimension(
        self, n: int, qq: FieldSpec, complex_s3: CochainComplex
    ) -> None:
        im, ker = im_ker_dimension_formula(n, 3, qq)
        assert im + ker == complex_s3.dimension(n)

    def test_hh_is_ker_minus_incoming_im(self, gf3: FieldSpec) -> None:
        for n in range(1, 12):
            _, ker = im_ker_dimension_formula(n, 5, gf3)
            incoming, _ = im_ker_dimension_formula(n - 1, 5, gf3)
            assert hh_dimension_formula(n, 5, gf3) == ker - incoming

    @pytest.mark.parametrize("s", [1, 2])
    def test_out_of_range(self, s: int, qq: FieldSpec) -> None:
        with pytest.raises(FormulaRangeError) as exc_info:
            hh_dimension_formula(0, s, qq)
        assert exc_info.value.value == s
        with pytest.raises(FormulaRangeError):
            im_ker_dimension_formula(0, s, qq)
        with pytest.raises(FormulaRangeError):
            branch_label(0, s, qq)

    def test_branch_labels(self, qq: FieldSpec, gf2: FieldSpec) -> None:
        assert [branch_label(n, 3, qq) for n in range(6)] == [
            "r=0 regular",
            "r=1 regular",
            "r=2 regular",
            "r=0 non-regular",
            "r=1 non-regular",
            "r=2 non-regular",
        ]
        assert branch_label(3, 3, gf2) == "r=0 regular"
        assert branch_label(7, 4, qq) == "r=3 vanishing"


class TestSigns:
    """Printed and computed sign conventions of the image families."""

    def test_printed_signs(self, qq: FieldSpec) -> None:
        assert image_sign(3, 3, qq, SignConvention.PRINTED) == -1
        assert image_sign(4, 3, qq, SignConvention.PRINTED) == 1

    def test_computed_signs(self, qq: FieldSpec) -> None:
        assert image_sign(0, 3, qq, SignConvention.COMPUTED) == -1
        assert image_sign(3, 3, qq, SignConvention.COMPUTED) == 1
        assert image_sign(4, 4, qq, SignConvention.COMPUTED) == -1
        assert image_sign(8, 4, qq, SignConvention.COMPUTED) == -1


class TestFamilies:
    """Sizes of the listed families."""

    @pytest.mark.parametrize("n", range(9))
    def test_family_sizes_match_formulas(
        self, n: int, qq: FieldSpec, complex_s3: CochainComplex
    ) -> None:
        im, ker = im_ker_dimension_formula(n, 3, qq)
        assert len(image_family(complex_s3, n)) == im
        assert len(kernel_family(complex_s3, n)) == ker
        assert len(cohomology_family(complex_s3, n)) == hh_dimension_formula(n, 3, qq)

    def test_image_family_lives_one_degree_up(self, complex_s3: CochainComplex) -> None:
        assert {c.degree for c in image_family(complex_s3, 1)} == {2}

    def test_labels_are_readable(self, complex_s3: CochainComplex) -> None:
        first = image_family(complex_s3, 1)[0]
        assert first.label == "delta[0,0] - delta[2,0]"
        assert cohomology_family(complex_s3, 0)[0].label == "sum_i alpha[i,0]^0"


class TestVerifyStatedBases:
    """Membership, independence and dimension of the listed families."""

    @pytest.mark.parametrize("n", range(9))
    def test_s3_rationals(self, n: int, complex_s3: CochainComplex) -> None:
        report = verify_stated_bases(complex_s3, n)
        assert report.passed, report.first_failure
        assert report.branch == branch_label(n, 3, complex_s3.field)

    @pytest.mark.parametrize("n", range(7))
    def test_s3_characteristic_two(self, n: int, complex_s3_gf2: CochainComplex) -> None:
        report = verify_stated_bases(complex_s3_gf2, n)
        assert report.passed
        assert report.notes == []

    @pytest.mark.parametrize("n", range(10))
    def test_s4_rationals(self, n: int, complex_s4: CochainComplex) -> None:
        assert verify_stated_bases(complex_s4, n).passed

    def test_printed_sign_mismatch_is_a_note(self, complex_s3: CochainComplex) -> None:
        report = verify_stated_bases(complex_s3, 2)
        assert report.passed
        assert len(report.notes) == 1
        assert report.notes[0].startswith("NOTE: image family out of degree 1 (m=0, r=1)")
        assert "span-equal, element-level mismatch" not in report.notes[0]

    def test_degree_zero_has_no_image_check(self, complex_s3: CochainComplex) -> None:
        kinds = [check.kind for check in verify_stated_bases(complex_s3, 0).checks]
        assert kinds == ["kernel", "cohomology"]

    def test_needs_s_at_least_three(self, qq: FieldSpec) -> None:
        complex_ = CochainComplex(MinimalResolution(build_algebra(2, qq)))
        with pytest.raises(FormulaRangeError):
            verify_stated_bases(complex_, 0)
