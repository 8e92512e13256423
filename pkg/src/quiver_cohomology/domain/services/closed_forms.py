"""Closed-form dimensions and basis families of Hochschild cohomology for s >= 3.

Degrees are written n = m*s + r with 0 <= r < s. A degree is "regular" when
s is even, m is even or the characteristic is 2; the non-regular r = 0 and
r = 1 branches are where the alternating circulant has full rank.

Image families come in two sign conventions. COMPUTED uses the sign
(-1)^{ms+1} produced by the differential; PRINTED keeps the signs as they are
usually quoted (always -1 at r = 0, always +1 at r = 1). The two differ in
the odd/odd r = 0 branch and the even r = 1 branch away from characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import structlog

from quiver_cohomology.domain.entities.cochain import Cochain, sum_cochains
from quiver_cohomology.domain.entities.verification import FamilyCheck, StatedBasisReport
from quiver_cohomology.domain.errors.domain_errors import FormulaRangeError, ValidationError
from quiver_cohomology.domain.services.cochains import CochainComplex
from quiver_cohomology.domain.services.exact_linalg import apply, is_zero_vector, rank, solve
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec

logger = structlog.get_logger()


class SignConvention(str, Enum):
    PRINTED = "printed"
    COMPUTED = "computed"


@dataclass(frozen=True, slots=True)
class DegreeDecomposition:
    """n = m*s + r with 0 <= r < s."""

    n: int
    s: int
    m: int
    r: int

    @property
    def ms(self) -> int:
        return self.m * self.s


def decompose_degree(n: int, s: int) -> DegreeDecomposition:
    if n < 0:
        raise ValidationError("Degree must be non-negative", field="n", value=n)
    if s < 1:
        raise ValidationError("The quiver needs at least one vertex", field="s", value=s)
    m, r = divmod(n, s)
    return DegreeDecomposition(n=n, s=s, m=m, r=r)


def is_regular(m: int, s: int, field: FieldSpec) -> bool:
    return s % 2 == 0 or m % 2 == 0 or field.characteristic == 2


def _require_range(formula: str, s: int) -> None:
    if s < 3:
        raise FormulaRangeError(formula, s)


def branch_label(n: int, s: int, field: FieldSpec) -> str:
    """Label of the closed-form branch at degree n, e.g. "r=1 regular"."""
    _require_range("branch_label", s)
    d = decompose_degree(n, s)
    if d.r > 2:
        return f"r={d.r} vanishing"
    if d.r == 2:
        return "r=2 regular" if is_regular(d.m, s, field) else "r=2 non-regular"
    return f"r={d.r} regular" if is_regular(d.m, s, field) else f"r={d.r} non-regular"


def hh_dimension_formula(n: int, s: int, field: FieldSpec) -> int:
    """dim HH^n for s >= 3: ms+1, 2ms+4 or ms+3 in the regular r = 0, 1, 2 branches, else 0."""
    _require_range("hh_dimension_formula", s)
    d = decompose_degree(n, s)
    if not is_regular(d.m, s, field):
        return 0
    if d.r == 0:
        return d.ms + 1
    if d.r == 1:
        return 2 * d.ms + 4
    if d.r == 2:
        return d.ms + 3
    return 0


def im_ker_dimension_formula(n: int, s: int, field: FieldSpec) -> tuple[int, int]:
    """(dim Im, dim Ker) of the coboundary out of degree n, for s >= 3."""
    _require_range("im_ker_dimension_formula", s)
    d = decompose_degree(n, s)
    ms = d.ms
    regular = is_regular(d.m, s, field)
    if d.r == 0:
        if regular:
            return (s - 1) * (ms + 1), ms + 1
        return s * (ms + 1), 0
    if d.r == 1:
        if regular:
            return (s - 1) * (ms + 3), (s + 1) * (ms + 1) + 2
        return s * (ms + 3), s * (ms + 1)
    if d.r == 2:
        return 0, s * (ms + 3)
    return 0, 0


def image_sign(n: int, s: int, field: FieldSpec, convention: SignConvention) -> int:
    """Sign between the two halves of each image element for the coboundary out of degree n."""
    d = decompose_degree(n, s)
    if convention is SignConvention.PRINTED:
        return -1 if d.r == 0 else 1
    return -1 if (d.ms + 1) % 2 else 1


def _image_rows(d: DegreeDecomposition, field: FieldSpec) -> range:
    return range(d.s if not is_regular(d.m, d.s, field) else d.s - 1)


def image_family(
    complex_: CochainComplex,
    n: int,
    convention: SignConvention = SignConvention.COMPUTED,
) -> list[Cochain]:
    """Listed basis of the image of the coboundary out of degree n (cochains of degree n+1)."""
    s = complex_.s
    field = complex_.field
    _require_range("image_family", s)
    d = decompose_degree(n, s)
    sign = image_sign(n, s, field, convention)
    target = n + 1
    family: list[Cochain] = []
    if d.r == 0:
        for i in _image_rows(d, field):
            for j in range(d.ms + 1):
                here = complex_.beta(i, j + 1, target) + complex_.gamma(i, j, target)
                there = complex_.beta(i - 1, j + 1, target) + complex_.gamma(i - 1, j, target)
                family.append(
                    (here + there.scale(sign)).relabel(
                        f"beta[{i},{j + 1}] + gamma[{i},{j}] {_op(sign)} "
                        f"(beta[{(i - 1) % s},{j + 1}] + gamma[{(i - 1) % s},{j}])"
                    )
                )
    elif d.r == 1:
        for i in _image_rows(d, field):
            for j in range(d.ms + 3):
                shifted = complex_.delta(i - 1, j, target).scale(sign)
                element = complex_.delta(i, j, target) + shifted
                label = f"delta[{i},{j}] {_op(sign)} delta[{(i - 1) % s},{j}]"
                family.append(element.relabel(label))
    return family


def kernel_family(complex_: CochainComplex, n: int) -> list[Cochain]:
    """Listed basis of the kernel of the coboundary out of degree n."""
    s = complex_.s
    field = complex_.field
    _require_range("kernel_family", s)
    d = decompose_degree(n, s)
    regular = is_regular(d.m, s, field)
    family: list[Cochain] = []
    if d.r == 0 and regular:
        family.extend(alpha_sum(complex_, j, n) for j in range(d.ms + 1))
    elif d.r == 1 and not regular:
        family.extend(
            _beta_gamma(complex_, i, j, n) for i in range(s) for j in range(d.ms + 1)
        )
    elif d.r == 1:
        family.extend(beta_sum(complex_, j, n) for j in range(d.ms + 2))
        family.extend(
            _beta_gamma(complex_, i, j, n) for i in range(s - 1) for j in range(d.ms + 1)
        )
        family.extend(gamma_sum(complex_, j, n) for j in range(d.ms + 2))
    elif d.r == 2:
        family.extend(complex_.delta(i, j, n) for i in range(s) for j in range(n + 1))
    return family


def cohomology_family(complex_: CochainComplex, n: int) -> list[Cochain]:
    """Listed basis of HH^n as cocycle representatives."""
    s = complex_.s
    field = complex_.field
    _require_range("cohomology_family", s)
    d = decompose_degree(n, s)
    if not is_regular(d.m, s, field):
        return []
    if d.r == 0:
        return [alpha_sum(complex_, j, n) for j in range(d.ms + 1)]
    if d.r == 1:
        return (
            [beta_sum(complex_, 0, n)]
            + [gamma_sum(complex_, j, n) for j in range(d.ms + 2)]
            + [_beta_gamma(complex_, s - 1, j, n) for j in range(d.ms + 1)]
        )
    if d.r == 2:
        return [complex_.delta(s - 1, j, n) for j in range(d.ms + 3)]
    return []


def _op(sign: int) -> str:
    return "+" if sign > 0 else "-"


def alpha_sum(complex_: CochainComplex, j: int, n: int) -> Cochain:
    terms = [complex_.alpha(i, j, n) for i in range(complex_.s)]
    return sum_cochains(terms, complex_.algebra, n, label=f"sum_i alpha[i,{j}]^{n}")


def beta_sum(complex_: CochainComplex, j: int, n: int) -> Cochain:
    terms = [complex_.beta(i, j, n) for i in range(complex_.s)]
    return sum_cochains(terms, complex_.algebra, n, label=f"sum_i beta[i,{j}]^{n}")


def gamma_sum(complex_: CochainComplex, j: int, n: int) -> Cochain:
    terms = [complex_.gamma(i, j, n) for i in range(complex_.s)]
    return sum_cochains(terms, complex_.algebra, n, label=f"sum_i gamma[i,{j}]^{n}")


def _beta_gamma(complex_: CochainComplex, i: int, j: int, n: int) -> Cochain:
    return (complex_.beta(i, j + 1, n) + complex_.gamma(i, j, n)).relabel(
        f"beta[{i},{j + 1}]^{n} + gamma[{i},{j}]^{n}"
    )


# -- verification ---------------------------------------------------------------


def _check_image(complex_: CochainComplex, family: list[Cochain], n: int) -> FamilyCheck:
    """Family of degree-n cochains against the image of the coboundary into degree n."""
    incoming = complex_.incoming_matrix(n)
    first_failing: str | None = None
    for cochain in family:
        if solve(incoming, complex_.coordinates(cochain)) is None:
            first_failing = cochain.label
            break
    independent = rank(complex_.matrix_of(family, n)) == len(family) if family else True
    return FamilyCheck(
        kind="image",
        degree=n,
        listed=len(family),
        expected=complex_.hat_rank(n - 1),
        membership=first_failing is None,
        independent=independent,
        first_failing_element=first_failing,
    )


def _check_kernel(complex_: CochainComplex, family: list[Cochain], n: int) -> FamilyCheck:
    hat = complex_.hat_matrix(n)
    first_failing: str | None = None
    for cochain in family:
        if not is_zero_vector(apply(hat, complex_.coordinates(cochain))):
            first_failing = cochain.label
            break
    independent = rank(complex_.matrix_of(family, n)) == len(family) if family else True
    return FamilyCheck(
        kind="kernel",
        degree=n,
        listed=len(family),
        expected=complex_.dimension(n) - complex_.hat_rank(n),
        membership=first_failing is None,
        independent=independent,
        first_failing_element=first_failing,
    )


def _check_cohomology(complex_: CochainComplex, family: list[Cochain], n: int) -> FamilyCheck:
    first_failing = next((c.label for c in family if not complex_.is_cocycle(c)), None)
    independent = complex_.quotient_rank(family, n) == len(family) if family else True
    return FamilyCheck(
        kind="cohomology",
        degree=n,
        listed=len(family),
        expected=complex_.hh_dimension_computed(n).dim_hh,
        membership=first_failing is None,
        independent=independent,
        first_failing_element=first_failing,
    )


def _printed_note(complex_: CochainComplex, n: int) -> str | None:
    """Compare the printed image family of the coboundary out of degree n with the image."""
    field = complex_.field
    s = complex_.s
    if image_sign(n, s, field, SignConvention.PRINTED) == image_sign(
        n, s, field, SignConvention.COMPUTED
    ) or field.characteristic == 2:
        return None
    printed = image_family(complex_, n, SignConvention.PRINTED)
    if not printed:
        return None
    target = n + 1
    hat = complex_.hat_matrix(n)
    members = all(solve(hat, complex_.coordinates(c)) is not None for c in printed)
    span_equal = members and rank(complex_.matrix_of(printed, target)) == complex_.hat_rank(n)
    label = "span-equal, element-level mismatch" if span_equal else "printed family differs"
    d = decompose_degree(n, s)
    return (
        f"NOTE: image family out of degree {n} (m={d.m}, r={d.r}) with printed signs: "
        f"{label}; verified against sign {_op(image_sign(n, s, field, SignConvention.COMPUTED))}1"
    )


def verify_stated_bases(complex_: CochainComplex, n: int) -> StatedBasisReport:
    """Check the listed image, kernel and cohomology families at degree n.

    The image family for degree n is the one listed for the coboundary out of
    degree n-1; membership there is solvability against the incoming matrix.
    """
    s = complex_.s
    _require_range("verify_stated_bases", s)
    d = decompose_degree(n, s)
    checks: list[FamilyCheck] = []
    notes: list[str] = []
    if n >= 1:
        checks.append(_check_image(complex_, image_family(complex_, n - 1), n))
        note = _printed_note(complex_, n - 1)
        if note:
            notes.append(note)
    checks.append(_check_kernel(complex_, kernel_family(complex_, n), n))
    checks.append(_check_cohomology(complex_, cohomology_family(complex_, n), n))
    report = StatedBasisReport(
        n=n,
        m=d.m,
        r=d.r,
        branch=branch_label(n, s, complex_.field),
        checks=checks,
        notes=notes,
    )
    logger.info(
        "stated_bases_verified",
        s=s,
        field=complex_.field.label,
        n=n,
        passed=report.passed,
        notes=len(notes),
    )
    return report
