"""The cochain complex Hom(Q, A) and exact Hochschild cohomology dimensions.

A degree-n cochain is fixed by its values on the generators b^n_{i,j}, each a
combination of the corner words of e_i A e_{i+n}. The coboundary of f is the
cochain f o d^{n+1}.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Mapping, Sequence
from typing import Any, TypeVar

import structlog

from quiver_cohomology.domain.common.memo import LocalMemo
from quiver_cohomology.domain.entities.bimodule import BimoduleMap
from quiver_cohomology.domain.entities.cochain import Cochain
from quiver_cohomology.domain.entities.quiver_algebra import AlgebraElement
from quiver_cohomology.domain.entities.verification import HomologyDimensions
from quiver_cohomology.domain.errors.domain_errors import (
    CohomologyError,
    IncompatibleOperandsError,
    ValidationError,
)
from quiver_cohomology.domain.protocols.computation_cache import IComputationCache
from quiver_cohomology.domain.services.exact_linalg import (
    Matrix,
    Vector,
    apply,
    hstack,
    is_zero_vector,
    kernel_basis,
    matmul,
    rank,
    solve,
)
from quiver_cohomology.domain.services.resolution import MinimalResolution
from quiver_cohomology.domain.value_objects.basis_element import BasisElement, Word
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex

logger = structlog.get_logger()

T = TypeVar("T")

HomKey = tuple[GeneratorIndex, BasisElement]


class CochainComplex:
    """Cochains over a resolution, with the coboundary matrices and their ranks."""

    def __init__(
        self, resolution: MinimalResolution, cache: IComputationCache | None = None
    ) -> None:
        self.resolution = resolution
        self.algebra = resolution.algebra
        self.field = resolution.algebra.field
        self._cache: IComputationCache = (
            cache if resolution.is_standard and cache is not None else LocalMemo()
        )
        self._lock = threading.RLock()
        self._keys: dict[int, tuple[HomKey, ...]] = {}
        self._index: dict[int, dict[HomKey, int]] = {}
        self._logger = logger.bind(
            component="cochains", s=self.algebra.s, field=self.field.label
        )

    @property
    def s(self) -> int:
        return self.algebra.s

    def _cached(self, kind: str, params: Mapping[str, Any], factory: Callable[[], T]) -> T:
        full = {"s": self.s, "characteristic": self.field.characteristic, **params}
        return self._cache.get_or_compute(kind, full, factory)

    # -- bases and coordinates ----------------------------------------------

    def _hom_keys(self, n: int) -> tuple[HomKey, ...]:
        if n < 0:
            raise ValidationError("Cochain degree must be non-negative", field="n", value=n)
        with self._lock:
            found = self._keys.get(n)
            if found is None:
                found = tuple(
                    (g, basis)
                    for g in self.resolution.generators(n)
                    for basis in self.algebra.corner_basis(g.i, n)
                )
                self._keys[n] = found
                self._index[n] = {key: k for k, key in enumerate(found)}
            return found

    def _hom_index(self, n: int) -> dict[HomKey, int]:
        self._hom_keys(n)
        return self._index[n]

    def hom_basis(self, n: int) -> list[Cochain]:
        """Named basis of degree-n cochains: generators (i outer, j inner), then corner words."""
        return [
            Cochain.basis_cochain(self.algebra, basis.word, g.i, g.j, n)
            for g, basis in self._hom_keys(n)
        ]

    def dimension(self, n: int) -> int:
        if n < 0:
            return 0
        return len(self._hom_keys(n))

    def coordinates(self, cochain: Cochain) -> Vector:
        self._check(cochain)
        index = self._hom_index(cochain.degree)
        vector = [self.field.zero] * len(index)
        for g, value in cochain.values.items():
            for basis, c in value.coeffs.items():
                position = index.get((g, basis))
                if position is None:
                    raise CohomologyError(
                        f"Value {basis} at {g} is outside its corner",
                        degree=cochain.degree,
                        context={"generator": str(g), "value": str(basis)},
                    )
                vector[position] = c
        return vector

    def from_vector(self, n: int, vector: Sequence[Any], label: str | None = None) -> Cochain:
        keys = self._hom_keys(n)
        if len(vector) != len(keys):
            raise IncompatibleOperandsError(
                "Coordinate vector does not match the cochain space",
                context={"degree": n, "expected": len(keys), "actual": len(vector)},
            )
        values: dict[GeneratorIndex, dict[BasisElement, Any]] = {}
        for (g, basis), c in zip(keys, vector, strict=True):
            if c:
                values.setdefault(g, {})[basis] = c
        return Cochain(
            self.algebra,
            n,
            {g: self.algebra.element(coeffs) for g, coeffs in values.items()},
            label=label,
        )

    def matrix_of(self, cochains: Sequence[Cochain], n: int) -> Matrix:
        """Columns are the coordinate vectors of ``cochains`` in degree n."""
        for cochain in cochains:
            if cochain.degree != n:
                raise IncompatibleOperandsError(
                    "Cochain of the wrong degree in a family",
                    context={"expected": n, "actual": cochain.degree},
                )
        return Matrix.from_columns(
            self.field, self.dimension(n), [self.coordinates(c) for c in cochains]
        )

    def _check(self, cochain: Cochain) -> None:
        if cochain.algebra.key != self.algebra.key:
            raise IncompatibleOperandsError(
                "Cochain belongs to a different algebra",
                context={"expected": self.algebra.key, "actual": cochain.algebra.key},
            )

    # -- composition and coboundaries ------------------------------------------

    def compose(self, cochain: Cochain, bimodule_map: BimoduleMap) -> Cochain:
        """The cochain f o phi: b -> sum of c * left * f(b') * right over the terms of phi(b)."""
        self._check(cochain)
        if bimodule_map.target_degree != cochain.degree:
            raise IncompatibleOperandsError(
                "Cochain degree does not match the map target",
                context={"cochain": cochain.degree, "target": bimodule_map.target_degree},
            )
        algebra = self.algebra
        values: dict[GeneratorIndex, AlgebraElement] = {}
        for g, image in bimodule_map.images.items():
            acc = algebra.zero()
            for (inner, left, right), c in image.terms.items():
                value = cochain.values.get(inner)
                if value is None:
                    continue
                product = algebra.basis_element(left.vertex, left.word) * value
                product = product * algebra.basis_element(right.vertex, right.word)
                acc = acc + product.scale(c)
            if not acc.is_zero():
                values[g] = acc
        return Cochain(algebra, bimodule_map.source_degree, values)

    def coboundary(self, cochain: Cochain) -> Cochain:
        return self.compose(cochain, self.resolution.differential(cochain.degree + 1))

    def hat_matrix(self, n: int) -> Matrix:
        """Matrix of the coboundary from degree n to degree n+1 in the hom bases."""
        if n < 0:
            raise ValidationError("Cochain degree must be non-negative", field="n", value=n)
        return self._cached("hat_matrix", {"n": n}, lambda: self._build_hat(n))

    def _build_hat(self, n: int) -> Matrix:
        algebra = self.algebra
        source = self._hom_keys(n)
        target_index = self._hom_index(n + 1)
        by_generator: dict[GeneratorIndex, list[tuple[int, BasisElement]]] = {}
        for col, (g, basis) in enumerate(source):
            by_generator.setdefault(g, []).append((col, basis))

        entries: dict[int, dict[int, Any]] = {}
        differential = self.resolution.differential(n + 1)
        for g, image in differential.images.items():
            for (inner, left, right), c in image.terms.items():
                for col, basis in by_generator.get(inner, ()):
                    first = algebra.multiply_basis(left, basis)
                    if first is None:
                        continue
                    second = algebra.multiply_basis(first[1], right)
                    if second is None:
                        continue
                    row = target_index.get((g, second[1]))
                    if row is None:
                        raise CohomologyError(
                            f"Coboundary of {basis} at {inner} leaves the corner at {g}",
                            degree=n + 1,
                        )
                    value = c if first[0] * second[0] > 0 else -c
                    row_entries = entries.setdefault(row, {})
                    row_entries[col] = row_entries.get(col, self.field.zero) + value
        matrix = Matrix(len(target_index), len(source), self.field, entries)
        self._logger.debug("hat_matrix_built", n=n, shape=matrix.shape, nnz=matrix.nnz)
        return matrix

    def incoming_matrix(self, n: int) -> Matrix:
        """Matrix of the coboundary into degree n; empty with zero columns for n = 0."""
        if n == 0:
            return Matrix.zeros(self.dimension(0), 0, self.field)
        return self.hat_matrix(n - 1)

    def hat_rank(self, n: int) -> int:
        """rank of the coboundary out of degree n; 0 for n < 0."""
        if n < 0:
            return 0
        return self._cached("hat_rank", {"n": n}, lambda: rank(self.hat_matrix(n)))

    def hh_dimension_computed(self, n: int) -> HomologyDimensions:
        """Kernel, image and cohomology dimensions at degree n, checking Im in Ker."""
        dim_hom = self.dimension(n)
        outgoing = self.hat_rank(n)
        incoming = self.hat_rank(n - 1)
        if n >= 1 and not matmul(self.hat_matrix(n), self.hat_matrix(n - 1)).is_zero():
            raise CohomologyError("Image of the incoming coboundary is not in the kernel", degree=n)
        dim_ker = dim_hom - outgoing
        dim_hh = dim_ker - incoming
        if dim_hh < 0:
            raise CohomologyError(
                "Negative cohomology dimension",
                degree=n,
                context={"dim_ker": dim_ker, "dim_im": incoming},
            )
        self._logger.debug("hh_dimension_computed", n=n, dim_hh=dim_hh)
        return HomologyDimensions(
            n=n,
            dim_hom=dim_hom,
            dim_ker=dim_ker,
            dim_im_incoming=incoming,
            dim_im_outgoing=outgoing,
            dim_hh=dim_hh,
        )

    def kernel_basis(self, n: int) -> list[Cochain]:
        return [
            self.from_vector(n, vector, label=f"ker[{k}]^{n}")
            for k, vector in enumerate(kernel_basis(self.hat_matrix(n)))
        ]

    # -- membership ---------------------------------------------------------------

    def is_cocycle(self, cochain: Cochain) -> bool:
        return is_zero_vector(apply(self.hat_matrix(cochain.degree), self.coordinates(cochain)))

    def is_coboundary(self, cochain: Cochain) -> bool:
        if cochain.degree == 0:
            return cochain.is_zero()
        return solve(self.hat_matrix(cochain.degree - 1), self.coordinates(cochain)) is not None

    def class_coordinates(
        self, cocycle: Cochain, representatives: Sequence[Cochain]
    ) -> list[Any] | None:
        """Coefficients c with cocycle - sum c_k rep_k a coboundary, or None if outside the span.

        Coefficients are unique when the representatives are independent modulo coboundaries.
        """
        n = cocycle.degree
        reps = self.matrix_of(representatives, n)
        system = hstack(self.field, self.dimension(n), reps, self.incoming_matrix(n))
        solution = solve(system, self.coordinates(cocycle))
        if solution is None:
            return None
        return solution[: len(representatives)]

    def quotient_rank(self, cochains: Sequence[Cochain], n: int) -> int:
        """Dimension of the span of ``cochains`` modulo coboundaries."""
        incoming = self.incoming_matrix(n)
        stacked = hstack(self.field, self.dimension(n), self.matrix_of(cochains, n), incoming)
        return rank(stacked) - self.hat_rank(n - 1)

    # -- named cochains -------------------------------------------------------------

    def named(self, word: Word, i: int, j: int, n: int) -> Cochain:
        return Cochain.basis_cochain(self.algebra, word, i, j, n)

    def alpha(self, i: int, j: int, n: int) -> Cochain:
        return self.named(Word.ONE, i, j, n)

    def beta(self, i: int, j: int, n: int) -> Cochain:
        return self.named(Word.X, i, j, n)

    def gamma(self, i: int, j: int, n: int) -> Cochain:
        return self.named(Word.Y, i, j, n)

    def delta(self, i: int, j: int, n: int) -> Cochain:
        return self.named(Word.XY, i, j, n)
