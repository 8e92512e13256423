"""Yoneda products of Hochschild cocycles by lifting through the resolution.

Two lifting oracles are available for the ring generators
z_u = sum_i alpha[i,u]^D: the explicit index shifts theta_u^v, and a generic
solver that builds lift_0, lift_1, ... one linear system per corner. The
product of a degree-m cocycle f with g is f o lift_m(g).
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Iterable, Mapping, Sequence
from itertools import combinations, combinations_with_replacement
from typing import Any, TypeVar

import structlog

from quiver_cohomology.domain.common.memo import LocalMemo
from quiver_cohomology.domain.entities.bimodule import BimoduleElement, BimoduleMap, TensorKey
from quiver_cohomology.domain.entities.cochain import Cochain
from quiver_cohomology.domain.entities.lifting import LiftingChain, RingPresentation
from quiver_cohomology.domain.entities.verification import (
    NilpotenceReport,
    NilpotenceSample,
    OracleComparison,
    PresentationReport,
    ProductCheck,
)
from quiver_cohomology.domain.errors.domain_errors import (
    FormulaRangeError,
    LiftingError,
    NotACocycleError,
    ValidationError,
)
from quiver_cohomology.domain.protocols.computation_cache import IComputationCache
from quiver_cohomology.domain.services.closed_forms import alpha_sum, cohomology_family
from quiver_cohomology.domain.services.cochains import CochainComplex
from quiver_cohomology.domain.services.exact_linalg import Matrix, Vector, solve_many, submatrix
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec
from quiver_cohomology.domain.value_objects.generator_index import GeneratorIndex

logger = structlog.get_logger()

T = TypeVar("T")


def generator_degree(s: int, field: FieldSpec) -> int:
    """Degree D of the ring generators: 2s for odd s away from characteristic 2, else s."""
    if s < 1:
        raise ValidationError("The quiver needs at least one vertex", field="s", value=s)
    return 2 * s if s % 2 == 1 and field.characteristic != 2 else s


def presentation_case(s: int, field: FieldSpec) -> str:
    return "i" if generator_degree(s, field) == 2 * s else "ii"


class YonedaCalculator:
    """Liftings, products and ring-structure checks over one cochain complex."""

    def __init__(
        self,
        complex_: CochainComplex,
        cache: IComputationCache | None = None,
        steps_margin: int = 0,
        nilpotence_max_power: int = 3,
    ) -> None:
        self.complex = complex_
        self.resolution = complex_.resolution
        self.algebra = complex_.algebra
        self.field = complex_.field
        self.generator_degree = generator_degree(self.algebra.s, self.field)
        self._cache: IComputationCache = (
            cache if self.resolution.is_standard and cache is not None else LocalMemo()
        )
        self._steps_margin = steps_margin
        self._nilpotence_max_power = nilpotence_max_power
        self._lock = threading.RLock()
        self._chains: dict[tuple[int, tuple[str, ...]], LiftingChain] = {}
        self._pairs: dict[tuple[int, int], Cochain] = {}
        self._logger = logger.bind(
            component="yoneda",
            s=self.algebra.s,
            field=self.field.label,
            generator_degree=self.generator_degree,
        )

    @property
    def s(self) -> int:
        return self.algebra.s

    def _cached(self, kind: str, params: Mapping[str, Any], factory: Callable[[], T]) -> T:
        full = {"s": self.s, "characteristic": self.field.characteristic, **params}
        return self._cache.get_or_compute(kind, full, factory)

    # -- ring generators and theta liftings --------------------------------------

    def z(self, u: int) -> Cochain:
        """The generator z_u = sum_i alpha[i,u]^D."""
        self._check_index(u)
        return alpha_sum(self.complex, u, self.generator_degree).relabel(f"z_{u}")

    def generators(self) -> list[Cochain]:
        return [self.z(u) for u in range(self.generator_degree + 1)]

    def _check_index(self, u: int) -> None:
        if not 0 <= u <= self.generator_degree:
            raise ValidationError(
                f"Generator index must lie in [0, {self.generator_degree}]", field="u", value=u
            )

    def theta(self, u: int, v: int) -> BimoduleMap:
        """Index shift Q^{D+v} -> Q^v: b_{k,l} -> b_{k,l-u} when 0 <= l-u <= v, else 0."""
        self._check_index(u)
        if v < 0:
            raise ValidationError("Lifting step must be non-negative", field="v", value=v)
        degree = self.generator_degree + v
        images: dict[GeneratorIndex, BimoduleElement] = {}
        for g in self.resolution.generators(degree):
            w = g.j - u
            if 0 <= w <= v:
                images[g] = BimoduleElement.generator(self.algebra, GeneratorIndex(v, g.i, w))
        return BimoduleMap(self.algebra, degree, v, images)

    def theta_chain(self, u: int, steps: int) -> LiftingChain:
        return LiftingChain(self.z(u), tuple(self.theta(u, v) for v in range(steps + 1)), "theta")

    def verify_chain(self, chain: LiftingChain) -> bool:
        """Both defining identities of a lifting chain, generator by generator."""
        first = chain.lift(0)
        for g in self.resolution.generators(chain.degree):
            if self.resolution.augmentation(first.image(g)) != chain.base.value(g):
                return False
        for v in range(chain.steps):
            left = chain.lift(v).compose(self.resolution.differential(chain.degree + v + 1))
            right = self.resolution.differential(v + 1).compose(chain.lift(v + 1))
            if left != right:
                self._logger.debug("lifting_square_failed", method=chain.method, v=v)
                return False
        return True

    def verify_theta_squares(self, u: int, max_v: int) -> bool:
        """z_u = (multiplication) o theta_u^0 and the squares commute for v < max_v."""
        return self.verify_chain(self.theta_chain(u, max_v))

    # -- generic lifting -----------------------------------------------------------

    def _chain_key(self, z: Cochain) -> tuple[int, tuple[str, ...]]:
        fmt = self.field.format
        return z.degree, tuple(fmt(c) for c in self.complex.coordinates(z))

    def generic_lift(self, z: Cochain, steps: int) -> LiftingChain:
        """Lift a cocycle through ``steps`` squares with the deterministic particular solutions."""
        if steps < 0:
            raise ValidationError("Lifting steps must be non-negative", field="steps", value=steps)
        if not self.complex.is_cocycle(z):
            raise NotACocycleError(z.degree, z.label)
        key = self._chain_key(z)

        def build() -> LiftingChain:
            with self._lock:
                known = self._chains.get(key)
            if known is not None and known.steps >= steps:
                return known.truncated(steps)
            lifts = list(known.lifts) if known is not None else [self._lift_base(z)]
            while len(lifts) <= steps:
                lifts.append(self._lift_step(z.degree, len(lifts) - 1, lifts[-1]))
            chain = LiftingChain(z, tuple(lifts), "generic")
            with self._lock:
                current = self._chains.get(key)
                if current is None or current.steps < chain.steps:
                    self._chains[key] = chain
            return chain

        chain = self._cached(
            "lifting_chain", {"degree": key[0], "cochain": list(key[1]), "steps": steps}, build
        )
        return chain if chain.base.label == z.label else LiftingChain(z, chain.lifts, chain.method)

    def _solve_corners(
        self,
        step: int,
        matrix: Matrix,
        row_keys: Callable[[int, int], Sequence[int]],
        col_keys: Sequence[TensorKey],
        col_positions: Callable[[int, int], Sequence[int]],
        targets: Iterable[tuple[GeneratorIndex, Callable[[int], Any]]],
        target_degree: int,
    ) -> dict[GeneratorIndex, BimoduleElement]:
        """Solve matrix x = target per (origin, terminus) corner."""
        s = self.s
        groups: dict[tuple[int, int], list[tuple[GeneratorIndex, Callable[[int], Any]]]] = {}
        for g, target in targets:
            groups.setdefault((g.i % s, g.terminus(s)), []).append((g, target))
        images: dict[GeneratorIndex, BimoduleElement] = {}
        for (origin, terminus), members in sorted(groups.items()):
            rows = row_keys(origin, terminus)
            cols = col_positions(origin, terminus)
            system = submatrix(matrix, rows, cols)
            rhs: list[Vector] = [[target(r) for r in rows] for _, target in members]
            for (g, _), x in zip(members, solve_many(system, rhs), strict=True):
                if x is None:
                    raise LiftingError(
                        "Lifting system has no solution", step=step, generator=str(g)
                    )
                terms = {col_keys[cols[k]]: value for k, value in enumerate(x) if value}
                images[g] = BimoduleElement(self.algebra, target_degree, terms)
        return images

    def _lift_base(self, z: Cochain) -> BimoduleMap:
        """lift_0 with (multiplication) o lift_0 = z."""
        s = self.s
        basis = self.algebra.basis
        source = self.resolution.tensor_basis(0)

        def rows(origin: int, terminus: int) -> list[int]:
            return [b.index for b in basis if b.vertex == origin and b.terminus(s) == terminus]

        def target(g: GeneratorIndex) -> Callable[[int], Any]:
            value = z.value(g)
            return lambda r: value.coefficient(basis[r])

        images = self._solve_corners(
            0,
            self.resolution.augmentation_matrix(),
            rows,
            source.elements,
            source.corner,
            ((g, target(g)) for g in self.resolution.generators(z.degree)),
            0,
        )
        self._logger.debug("lift_step_solved", step=0, degree=z.degree)
        return BimoduleMap(self.algebra, z.degree, 0, images)

    def _lift_step(self, n: int, v: int, previous: BimoduleMap) -> BimoduleMap:
        """lift_{v+1} with d^{v+1} o lift_{v+1} = lift_v o d^{n+v+1}."""
        row_basis = self.resolution.tensor_basis(v)
        col_basis = self.resolution.tensor_basis(v + 1)
        differential = self.resolution.differential(n + v + 1)
        zero = self.field.zero

        def target(g: GeneratorIndex) -> Callable[[int], Any]:
            terms = previous.apply(differential.image(g)).terms
            return lambda r: terms.get(row_basis.elements[r], zero)

        images = self._solve_corners(
            v + 1,
            self.resolution.differential_matrix(v + 1),
            row_basis.corner,
            col_basis.elements,
            col_basis.corner,
            ((g, target(g)) for g in self.resolution.generators(n + v + 1)),
            v + 1,
        )
        self._logger.debug("lift_step_solved", step=v + 1, degree=n)
        return BimoduleMap(self.algebra, n + v + 1, v + 1, images)

    # -- products ---------------------------------------------------------------------

    def yoneda_product(self, f: Cochain, g: Cochain) -> Cochain:
        """f x g = f o lift_{deg f}(g), of degree deg f + deg g."""
        if not self.complex.is_cocycle(f):
            raise NotACocycleError(f.degree, f.label)
        chain = self.generic_lift(g, f.degree + self._steps_margin)
        product = self.complex.compose(f, chain.lift(f.degree))
        if f.label and g.label:
            return product.relabel(f"{f.label} x {g.label}")
        return product

    def theta_product(self, f: Cochain, u: int) -> Cochain:
        """f o theta_u^{deg f}: the product f x z_u through the explicit lifting."""
        if not self.complex.is_cocycle(f):
            raise NotACocycleError(f.degree, f.label)
        product = self.complex.compose(f, self.theta(u, f.degree))
        return product.relabel(f"{f.label} x z_{u}") if f.label else product

    def cohomologous(self, a: Cochain, b: Cochain) -> bool:
        return self.complex.is_coboundary(a - b)

    def generator_product(self, indices: Sequence[int]) -> Cochain:
        """z_{k1} x ... x z_{kt}, multiplied left to right."""
        if not indices:
            raise ValidationError(
                "At least one generator index is required", field="indices", value=[]
            )
        if len(indices) == 1:
            return self.z(indices[0])
        if len(indices) == 2:
            pair = (indices[0], indices[1])
            with self._lock:
                found = self._pairs.get(pair)
            if found is None:
                found = self.yoneda_product(self.z(pair[0]), self.z(pair[1]))
                with self._lock:
                    self._pairs[pair] = found
            return found
        return self.yoneda_product(self.generator_product(indices[:-1]), self.z(indices[-1]))

    def compare_lifting_oracles(self) -> list[OracleComparison]:
        """z_{u2} o theta_{u1}^D against z_{u2} x z_{u1} for every generator pair."""
        results: list[OracleComparison] = []
        for u1 in range(self.generator_degree + 1):
            for u2 in range(self.generator_degree + 1):
                generic = self.generator_product((u2, u1))
                explicit = self.theta_product(self.z(u2), u1)
                results.append(
                    OracleComparison(
                        u1=u1, u2=u2, cohomologous=self.cohomologous(generic, explicit)
                    )
                )
        self._logger.info(
            "lifting_oracles_compared",
            pairs=len(results),
            agree=sum(r.cohomologous for r in results),
        )
        return results

    def associativity_defect(self, f: Cochain, g: Cochain, h: Cochain) -> Cochain:
        """(f x g) x h - f x (g x h)."""
        return self.yoneda_product(self.yoneda_product(f, g), h) - self.yoneda_product(
            f, self.yoneda_product(g, h)
        )

    def graded_commutator(self, f: Cochain, g: Cochain) -> Cochain:
        """f x g - (-1)^{mn} g x f."""
        sign = -1 if (f.degree * g.degree) % 2 else 1
        return self.yoneda_product(f, g) - self.yoneda_product(g, f).scale(sign)

    # -- ring structure ---------------------------------------------------------------

    def presentation(self, max_power: int = 3) -> RingPresentation:
        return RingPresentation(
            s=self.s,
            characteristic=self.field.characteristic,
            generator_degree=self.generator_degree,
            case=presentation_case(self.s, self.field),
            max_power=max_power,
        )

    def class_in_generator_basis(self, cochain: Cochain) -> list[Any] | None:
        """Coordinates of a degree-Dt class in the basis sum_i alpha[i,j]^{Dt}."""
        basis = [alpha_sum(self.complex, j, cochain.degree) for j in range(cochain.degree + 1)]
        return self.complex.class_coordinates(cochain, basis)

    def product_check(self, indices: Sequence[int]) -> ProductCheck:
        product = self.generator_product(indices)
        coordinates = self.class_in_generator_basis(product)
        expected = sum(indices)
        one = self.field.one
        matches = coordinates is not None and all(
            (c == one) if j == expected else not c for j, c in enumerate(coordinates)
        )
        return ProductCheck(
            indices=tuple(indices),
            degree=product.degree,
            class_coordinates=[self.field.format(c) for c in coordinates or []],
            expected_index=expected,
            matches=matches,
        )

    def verify_presentation(self, max_power: int = 3) -> PresentationReport:
        """Products depend only on index sums, span the full degree and commute."""
        if self.s < 3:
            raise FormulaRangeError("verify_presentation", self.s)
        if max_power < 1:
            raise ValidationError(
                "max_power must be at least 1", field="max_power", value=max_power
            )
        presentation = self.presentation(max_power)
        count = presentation.generator_count
        products: list[ProductCheck] = []
        span_dimensions: dict[int, int] = {}
        cohomology_dimensions: dict[int, int] = {}
        for t in range(1, max_power + 1):
            degree = self.generator_degree * t
            combos = list(combinations_with_replacement(range(count), t))
            checks = [self.product_check(c) for c in combos]
            products.extend(checks)
            span_dimensions[t] = self.complex.quotient_rank(
                [self.generator_product(c) for c in combos], degree
            )
            cohomology_dimensions[t] = self.complex.hh_dimension_computed(degree).dim_hh
            self._logger.debug("power_checked", t=t, products=len(checks))

        commutative = all(
            self.cohomologous(self.generator_product((k, l)), self.generator_product((l, k)))
            for k, l in combinations(range(count), 2)
        )
        failing = [
            (k, l, q, r)
            for k, l, q, r in presentation.relations()
            if not self.cohomologous(self.generator_product((k, l)), self.generator_product((q, r)))
        ]
        report = PresentationReport(
            s=self.s,
            characteristic=self.field.characteristic,
            case=presentation.case,
            generator_degree=self.generator_degree,
            generator_count=count,
            max_power=max_power,
            products=products,
            span_dimensions=span_dimensions,
            cohomology_dimensions=cohomology_dimensions,
            commutative=commutative,
            failing_relations=failing,
        )
        self._logger.info("presentation_verified", passed=report.passed, failing=len(failing))
        return report

    def verify_nilpotence_samples(self, degrees: Sequence[int]) -> NilpotenceReport:
        """Listed HH classes outside degrees divisible by D have a vanishing power.

        Their cochains take values in the radical.
        """
        if self.s < 3:
            raise FormulaRangeError("verify_nilpotence_samples", self.s)
        samples: list[NilpotenceSample] = []
        for n in degrees:
            if n % self.generator_degree == 0:
                raise ValidationError(
                    "Nilpotence samples must avoid degrees divisible by the generator degree",
                    field="degrees",
                    value=n,
                )
            for cochain in cohomology_family(self.complex, n):
                vanishing: int | None = None
                power = cochain
                for k in range(2, self._nilpotence_max_power + 1):
                    power = self.yoneda_product(power, cochain)
                    if self.complex.is_coboundary(power):
                        vanishing = k
                        break
                samples.append(
                    NilpotenceSample(
                        degree=n,
                        label=cochain.label or f"class^{n}",
                        values_in_radical=cochain.is_in_radical(),
                        vanishing_power=vanishing,
                    )
                )
        report = NilpotenceReport(degrees=list(degrees), samples=samples)
        if not report.passed:
            self._logger.warning(
                "nilpotence_sample_failed",
                failing=[s.label for s in report.samples if not s.passed],
            )
        return report