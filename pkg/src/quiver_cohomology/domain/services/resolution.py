"""Minimal projective bimodule resolution of the algebra.

Q^n is free on the generators b^n_{i,j} (0 <= i < s, 0 <= j <= n) and the
differential is index local:

    b^n_{i,j} -> b^{n-1}_{i,j-1} x + b^{n-1}_{i,j} y
                 + (-1)^n (y b^{n-1}_{i+1,j} + x b^{n-1}_{i+1,j-1}),

with out-of-range terms dropped. Q^0 maps onto the algebra by multiplication.
The word expansions of the uniform elements g^n_{i,j} are only built to
check the two recursions; the differential never consults them.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Mapping, Sequence
from functools import lru_cache
from typing import Any, TypeVar

import structlog

from quiver_cohomology.domain.common.memo import LocalMemo
from quiver_cohomology.domain.entities.bimodule import (
    BimoduleElement,
    BimoduleMap,
    TensorBasis,
    TensorKey,
)
from quiver_cohomology.domain.entities.g_element import GElement
from quiver_cohomology.domain.entities.quiver_algebra import AlgebraElement, QuiverAlgebra
from quiver_cohomology.domain.entities.verification import (
    ComplexReport,
    ExactnessReport,
    GeneratorFailure,
)
from quiver_cohomology.domain.errors.domain_errors import ValidationError
from quiver_cohomology.domain.protocols.computation_cache import IComputationCache
from quiver_cohomology.domain.services.exact_linalg import Matrix, rank
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex, generators

logger = structlog.get_logger()

T = TypeVar("T")

SignRule = Callable[[int], int]


def standard_sign(n: int) -> int:
    """(-1)^n."""
    return -1 if n % 2 else 1


# -- generator sets -----------------------------------------------------------


@lru_cache(maxsize=None)
def _right_expansions(n: int) -> tuple[tuple[tuple[str, int], ...], ...]:
    """Word expansions of g^n_{i,j} for j = 0..n.

    Uses g^n_{i,j} = g^{n-1}_{i,j-1} x + g^{n-1}_{i,j} y.

    The expansions do not depend on the start vertex i.
    """
    if n == 0:
        return ((("", 1),),)
    previous = _right_expansions(n - 1)
    levels: list[tuple[tuple[str, int], ...]] = []
    for j in range(n + 1):
        acc: dict[str, int] = {}
        if j >= 1:
            for word, c in previous[j - 1]:
                acc[word + "x"] = acc.get(word + "x", 0) + c
        if j <= n - 1:
            for word, c in previous[j]:
                acc[word + "y"] = acc.get(word + "y", 0) + c
        levels.append(tuple(sorted(acc.items())))
    return tuple(levels)


def g_set(n: int, s: int) -> list[GElement]:
    """The s(n+1) uniform elements g^n_{i,j} with their word expansions, i outer and j inner."""
    if n < 0:
        raise ValidationError("Degree must be non-negative", field="n", value=n)
    if s < 1:
        raise ValidationError("The quiver needs at least one vertex", field="s", value=s)
    levels = _right_expansions(n)
    return [GElement(n, i, j, dict(levels[j])) for i in range(s) for j in range(n + 1)]


def expansion_is_full_binomial(g: GElement) -> bool:
    """g^n_{i,j} is the sum of all C(n, j) words with j letters x, each with coefficient 1."""
    return g.is_full_binomial()


def uniform_endpoints(g: GElement, s: int) -> bool:
    """Every word of g runs from e_i to e_{i+n}."""
    return g.has_uniform_endpoints() and g.origin() == g.i % s and g.terminus(s) == (g.i + g.n) % s


def left_recursion_expansion(
    previous: Sequence[GElement], n: int, i: int, j: int, s: int
) -> dict[str, int]:
    """Expansion of y g^{n-1}_{i+1,j} + x g^{n-1}_{i+1,j-1}, dropping out-of-range terms."""
    lookup = {(g.i, g.j): g for g in previous}
    nxt = (i + 1) % s
    acc: dict[str, int] = {}
    if j <= n - 1:
        for word, c in lookup[(nxt, j)].expansion.items():
            acc["y" + word] = acc.get("y" + word, 0) + c
    if j >= 1:
        for word, c in lookup[(nxt, j - 1)].expansion.items():
            acc["x" + word] = acc.get("x" + word, 0) + c
    return {w: c for w, c in acc.items() if c}


def verify_left_recursion(n: int, s: int, elements: Sequence[GElement] | None = None) -> bool:
    """True iff the degree-n elements also satisfy the left recursion over degree n-1.

    ``elements`` defaults to ``g_set(n, s)``; pass a modified list to exercise the check.
    """
    if n < 1:
        raise ValidationError("Left recursion starts at degree 1", field="n", value=n)
    current = list(elements) if elements is not None else g_set(n, s)
    if len(current) != s * (n + 1):
        return False
    previous = g_set(n - 1, s)
    for g in current:
        expected = left_recursion_expansion(previous, n, g.i, g.j, s)
        actual = {w: c for w, c in g.expansion.items() if c}
        if actual != expected:
            logger.debug("left_recursion_mismatch", n=n, i=g.i, j=g.j)
            return False
    return True


def one_sided_differential_coefficients(
    n: int, s: int
) -> dict[GeneratorIndex, list[tuple[GeneratorIndex, BasisElement]]]:
    """Coefficients r_h with g^n_{i,j} = sum over h of h r_h, h running over degree n-1.

    Each r_h is a single arrow sum restricted to vertex i+n-1: x for
    h = g^{n-1}_{i,j-1} and y for h = g^{n-1}_{i,j}.
    """
    if n < 1:
        raise ValidationError("One-sided differential starts at degree 1", field="n", value=n)
    out: dict[GeneratorIndex, list[tuple[GeneratorIndex, BasisElement]]] = {}
    for g in generators(n, s):
        end = (g.i + n - 1) % s
        terms: list[tuple[GeneratorIndex, BasisElement]] = []
        if g.j >= 1:
            terms.append((GeneratorIndex(n - 1, g.i, g.j - 1), BasisElement(end, Word.X)))
        if g.j <= n - 1:
            terms.append((GeneratorIndex(n - 1, g.i, g.j), BasisElement(end, Word.Y)))
        out[g] = terms
    return out


def verify_one_sided_coefficients(n: int, s: int) -> bool:
    """Expanding sum h r_h with the degree n-1 words reproduces every g^n_{i,j}."""
    previous = {g.index: g for g in g_set(n - 1, s)}
    for g in g_set(n, s):
        acc: dict[str, int] = {}
        for h, r in one_sided_differential_coefficients(n, s)[g.index]:
            for word, c in previous[h].expansion.items():
                key = word + r.word.value
                acc[key] = acc.get(key, 0) + c
        if {w: c for w, c in acc.items() if c} != {w: c for w, c in g.expansion.items() if c}:
            return False
    return True


# -- the resolution -----------------------------------------------------------


class MinimalResolution:
    """The complex (Q, d) over a fixed algebra.

    ``sign_rule`` replaces (-1)^n in the differential; it exists to build
    deliberately broken complexes for negative checks. Only the standard
    complex is memoized in the shared cache.
    """

    def __init__(
        self,
        algebra: QuiverAlgebra,
        sign_rule: SignRule | None = None,
        cache: IComputationCache | None = None,
    ) -> None:
        self.algebra = algebra
        self._sign_rule = sign_rule or standard_sign
        self._standard = sign_rule is None
        self._cache: IComputationCache = (
            cache if self._standard and cache is not None else LocalMemo()
        )
        self._lock = threading.RLock()
        self._tensor_bases: dict[int, TensorBasis] = {}
        self._differentials: dict[int, BimoduleMap] = {}
        self._logger = logger.bind(
            component="resolution", s=algebra.s, field=algebra.field.label
        )

    @property
    def s(self) -> int:
        return self.algebra.s

    @property
    def is_standard(self) -> bool:
        return self._standard

    def _memo(self, store: dict[int, T], key: int, factory: Callable[[], T]) -> T:
        with self._lock:
            found = store.get(key)
        if found is not None:
            return found
        value = factory()
        with self._lock:
            return store.setdefault(key, value)

    def _cached(self, kind: str, params: Mapping[str, Any], factory: Callable[[], T]) -> T:
        full = {"s": self.s, "characteristic": self.algebra.field.characteristic, **params}
        return self._cache.get_or_compute(kind, full, factory)

    def generators(self, n: int) -> list[GeneratorIndex]:
        return generators(n, self.s)

    def dimension(self, n: int) -> int:
        """dim_K Q^n = 16 s (n+1)."""
        return 16 * self.s * (n + 1)

    def tensor_basis(self, n: int) -> TensorBasis:
        return self._memo(self._tensor_bases, n, lambda: TensorBasis(self.algebra, n))

    def sign(self, n: int) -> Any:
        return self.algebra.field.element(self._sign_rule(n))

    def differential(self, n: int) -> BimoduleMap:
        """d^n: Q^n -> Q^{n-1} for n >= 1."""
        if n < 1:
            raise ValidationError(
                "Differentials are indexed from 1; degree 0 is the multiplication map",
                field="n",
                value=n,
            )
        return self._memo(self._differentials, n, lambda: self._build_differential(n))

    def _build_differential(self, n: int) -> BimoduleMap:
        s = self.s
        algebra = self.algebra
        one = algebra.field.one
        sign = self.sign(n)
        images: dict[GeneratorIndex, BimoduleElement] = {}
        for g in self.generators(n):
            i, j = g.i, g.j
            nxt = (i + 1) % s
            start = BasisElement(i, Word.ONE)
            end = (i + n - 1) % s
            stop = BasisElement((i + n) % s, Word.ONE)
            terms: dict[TensorKey, Any] = {}

            def add(key: TensorKey, value: Any) -> None:
                terms[key] = terms.get(key, algebra.field.zero) + value

            if j >= 1:
                add((GeneratorIndex(n - 1, i, j - 1), start, BasisElement(end, Word.X)), one)
            if j <= n - 1:
                add((GeneratorIndex(n - 1, i, j), start, BasisElement(end, Word.Y)), one)
                add((GeneratorIndex(n - 1, nxt, j), BasisElement(i, Word.Y), stop), sign)
            if j >= 1:
                add((GeneratorIndex(n - 1, nxt, j - 1), BasisElement(i, Word.X), stop), sign)
            images[g] = BimoduleElement(algebra, n - 1, terms)
        self._logger.debug("differential_built", n=n, generators=len(images))
        return BimoduleMap(algebra, n, n - 1, images)

    def apply(self, bimodule_map: BimoduleMap, x: BimoduleElement) -> BimoduleElement:
        return bimodule_map.apply(x)

    def compose(self, outer: BimoduleMap, inner: BimoduleMap) -> BimoduleMap:
        return outer.compose(inner)

    def augmentation(self, x: BimoduleElement) -> AlgebraElement:
        """The multiplication map Q^0 -> A: left b right -> left * right."""
        if x.degree != 0:
            raise ValidationError(
                "Multiplication map is defined on Q^0", field="degree", value=x.degree
            )
        algebra = self.algebra
        zero = algebra.field.zero
        out: dict[BasisElement, Any] = {}
        for (_, left, right), value in x.terms.items():
            product = algebra.multiply_basis(left, right)
            if product is None:
                continue
            sign, basis = product
            out[basis] = out.get(basis, zero) + (value if sign > 0 else -value)
        return algebra.element(out)

    def flatten(self, bimodule_map: BimoduleMap) -> Matrix:
        """Matrix of the underlying K-linear map in the tensor bases (columns: source)."""
        source = self.tensor_basis(bimodule_map.source_degree)
        target = self.tensor_basis(bimodule_map.target_degree)
        entries: dict[int, dict[int, Any]] = {}
        for c, (g, left, right) in enumerate(source.elements):
            image = bimodule_map.images.get(g)
            if image is None:
                continue
            for key, value in image.sandwich(left, right).terms.items():
                entries.setdefault(target.index[key], {})[c] = value
        return Matrix(target.dimension, source.dimension, self.algebra.field, entries)

    def augmentation_matrix(self) -> Matrix:
        """Matrix of the multiplication map Q^0 -> A (rows: canonical basis of A)."""

        def build() -> Matrix:
            source = self.tensor_basis(0)
            entries: dict[int, dict[int, Any]] = {}
            for c, (_, left, right) in enumerate(source.elements):
                product = self.algebra.multiply_basis(left, right)
                if product is not None:
                    sign, basis = product
                    entries.setdefault(basis.index, {})[c] = sign
            return Matrix(self.algebra.dimension, source.dimension, self.algebra.field, entries)

        return self._cached("augmentation_matrix", {}, build)

    def differential_matrix(self, n: int) -> Matrix:
        """flatten(d^n); n = 0 gives the multiplication map."""
        if n == 0:
            return self.augmentation_matrix()
        return self._cached(
            "differential_matrix", {"n": n}, lambda: self.flatten(self.differential(n))
        )

    def differential_rank(self, n: int) -> int:
        return self._cached(
            "differential_rank", {"n": n}, lambda: rank(self.differential_matrix(n))
        )

    # -- verification ---------------------------------------------------------

    def verify_complex(self, max_degree: int) -> ComplexReport:
        """Check d^0 d^1 = 0 and d^n d^{n+1} = 0 for 1 <= n <= max_degree on every generator.

        Failures are reported on the generator of the inner differential.
        """
        if max_degree < 1:
            raise ValidationError(
                "max_degree must be at least 1", field="max_degree", value=max_degree
            )
        failures: list[GeneratorFailure] = []
        first = self.differential(1)
        for g in self.generators(1):
            if not self.augmentation(first.image(g)).is_zero():
                failures.append(
                    GeneratorFailure(n=1, i=g.i, j=g.j, message="multiplication o d^1 is nonzero")
                )
        for n in range(1, max_degree + 1):
            outer = self.differential(n)
            inner = self.differential(n + 1)
            for g in self.generators(n + 1):
                if not outer.apply(inner.image(g)).is_zero():
                    failures.append(
                        GeneratorFailure(
                            n=n + 1, i=g.i, j=g.j, message=f"d^{n} o d^{n + 1} is nonzero"
                        )
                    )
        report = ComplexReport(
            max_degree=max_degree,
            checked_composites=max_degree + 1,
            failure_count=len(failures),
            first_failure=failures[0] if failures else None,
        )
        self._logger.info("complex_verified", max_degree=max_degree, passed=report.passed)
        return report

    def verify_exact_and_minimal(
        self, max_degree: int, ranks: Mapping[int, int] | None = None
    ) -> ExactnessReport:
        """Rank bookkeeping for exactness up to ``max_degree`` and the radical condition.

        ``ranks`` may carry precomputed ranks of d^0..d^N.
        """
        if max_degree < 2:
            raise ValidationError(
                "max_degree must be at least 2", field="max_degree", value=max_degree
            )
        dims = {n: self.dimension(n) for n in range(max_degree + 1)}
        known = dict(ranks or {})
        all_ranks = {
            n: known[n] if n in known else self.differential_rank(n)
            for n in range(max_degree + 1)
        }

        first_inexact: int | None = None
        algebra_dim = self.algebra.dimension
        if all_ranks[0] != algebra_dim or all_ranks[1] != dims[0] - algebra_dim:
            first_inexact = 0
        else:
            for n in range(1, max_degree):
                if all_ranks[n] + all_ranks[n + 1] != dims[n]:
                    first_inexact = n
                    break

        first_non_minimal: GeneratorFailure | None = None
        for n in range(1, max_degree + 1):
            first_non_minimal = self._first_non_minimal(n)
            if first_non_minimal is not None:
                break

        report = ExactnessReport(
            max_degree=max_degree,
            dimensions=dims,
            ranks=all_ranks,
            first_inexact_degree=first_inexact,
            first_non_minimal=first_non_minimal,
        )
        self._logger.info(
            "exactness_verified",
            max_degree=max_degree,
            exact=report.exact,
            minimal=report.minimal,
        )
        return report

    def _first_non_minimal(self, n: int) -> GeneratorFailure | None:
        d = self.differential(n)
        for g in self.generators(n):
            if not d.image(g).is_in_radical():
                return GeneratorFailure(n=n, i=g.i, j=g.j, message="image leaves the radical")
        # The flattened matrix must vanish on rows with two degree-0 factors.
        target = self.tensor_basis(n - 1)
        matrix = self.differential_matrix(n)
        for r, (g, left, right) in enumerate(target.elements):
            if left.degree + right.degree == 0 and matrix.row(r):
                return GeneratorFailure(
                    n=n, i=g.i, j=g.j, message="flattened differential hits a generator"
                )
        return None
