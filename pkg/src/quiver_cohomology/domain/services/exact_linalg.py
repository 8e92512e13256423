"""Exact sparse linear algebra over QQ and GF(p).

Matrices are immutable row-major dictionaries of nonzero sympy domain
elements. Elimination is delegated to sympy's ``DomainMatrix``; ``rank``
first splits a matrix into the connected components of its sparsity graph
so that the differentials of the resolution, which are block diagonal up to
a permutation, are eliminated block by block.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from typing import Any

import structlog
from sympy.polys.matrices import DomainMatrix

from quiver_cohomology.domain.errors.domain_errors import (
    DimensionMismatchError,
    IncompatibleOperandsError,
    ValidationError,
)
from quiver_cohomology.domain.value_objects.field_spec import FieldSpec

logger = structlog.get_logger()

Vector = list[Any]


class Matrix:
    """Immutable sparse matrix over a single field; only nonzero entries are stored."""

    __slots__ = ("_cols", "_entries", "_field", "_rows")

    def __init__(
        self,
        rows: int,
        cols: int,
        field: FieldSpec,
        entries: Mapping[int, Mapping[int, Any]] | None = None,
    ) -> None:
        if rows < 0 or cols < 0:
            raise ValidationError(
                "Matrix shape must be non-negative", field="shape", value=(rows, cols)
            )
        cleaned: dict[int, dict[int, Any]] = {}
        for r, row in (entries or {}).items():
            if not 0 <= r < rows:
                raise ValidationError("Row index out of range", field="row", value=r)
            kept: dict[int, Any] = {}
            for c, value in row.items():
                if not 0 <= c < cols:
                    raise ValidationError("Column index out of range", field="col", value=c)
                scalar = field.element(value)
                if scalar:
                    kept[c] = scalar
            if kept:
                cleaned[r] = kept
        self._rows = rows
        self._cols = cols
        self._field = field
        self._entries = cleaned

    @classmethod
    def _trusted(
        cls, rows: int, cols: int, field: FieldSpec, entries: dict[int, dict[int, Any]]
    ) -> Matrix:
        """Wrap already-clean entries (domain elements, no zeros, no empty rows)."""
        matrix = cls.__new__(cls)
        matrix._rows = rows
        matrix._cols = cols
        matrix._field = field
        matrix._entries = entries
        return matrix

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> Matrix:
        return cls(rows, cols, field)

    @classmethod
    def identity(cls, size: int, field: FieldSpec) -> Matrix:
        return cls._trusted(size, size, field, {k: {k: field.one} for k in range(size)})

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[Any]], cols: int | None = None
    ) -> Matrix:
        """Build from a dense list of rows of ints, Fractions or scalars."""
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {r: dict(enumerate(row)) for r, row in enumerate(rows)}
        return cls(len(rows), width, field, entries)

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int, columns: Sequence[Vector]) -> Matrix:
        entries: dict[int, dict[int, Any]] = {}
        for c, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatchError("from_columns", rows, len(column))
            for r, value in enumerate(column):
                if value:
                    entries.setdefault(r, {})[c] = value
        return cls(rows, len(columns), field, entries)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._entries.values())

    def is_zero(self) -> bool:
        return not self._entries

    def row(self, r: int) -> Mapping[int, Any]:
        return self._entries.get(r, {})

    def entry(self, r: int, c: int) -> Any:
        return self._entries.get(r, {}).get(c, self._field.zero)

    def entries(self) -> Iterator[tuple[int, int, Any]]:
        for r, row in self._entries.items():
            for c, value in row.items():
                yield r, c, value

    def column(self, c: int) -> Vector:
        out = [self._field.zero] * self._rows
        for r, row in self._entries.items():
            if c in row:
                out[r] = row[c]
        return out

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(
            {r: dict(row) for r, row in self._entries.items()},
            self.shape,
            self._field.domain,
        )

    def to_python(self) -> list[list[Any]]:
        """Dense rows of Fractions (QQ) or residues (GF(p))."""
        to_python = self._field.to_python
        zero = to_python(self._field.zero)
        dense = [[zero] * self._cols for _ in range(self._rows)]
        for r, c, value in self.entries():
            dense[r][c] = to_python(value)
        return dense

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._field == other._field
            and self._entries == other._entries
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Matrix({self._rows}x{self._cols}, nnz={self.nnz}, field={self._field.label})"


def _check_same_field(a: Matrix, b: Matrix, operation: str) -> None:
    if a.field != b.field:
        raise IncompatibleOperandsError(
            f"Cannot {operation} matrices over {a.field.label} and {b.field.label}",
            context={"operation": operation},
        )


def _components(m: Matrix) -> list[tuple[list[int], list[int]]]:
    """Connected components of the bipartite row/column graph of the nonzero entries."""
    parent: dict[int, int] = {}

    def find(node: int) -> int:
        parent.setdefault(node, node)
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    offset = m.rows
    for r, c, _ in m.entries():
        a, b = find(r), find(offset + c)
        if a != b:
            parent[a] = b

    groups: dict[int, tuple[list[int], list[int]]] = {}
    for node in sorted(parent):
        rows, cols = groups.setdefault(find(node), ([], []))
        if node < offset:
            rows.append(node)
        else:
            cols.append(node - offset)
    return list(groups.values())


def rank(m: Matrix) -> int:
    """Rank of ``m`` over its field."""
    if m.is_zero():
        return 0
    domain = m.field.domain
    total = 0
    components = _components(m)
    for rows, cols in components:
        if len(rows) == 1 or len(cols) == 1:
            total += 1
            continue
        col_pos = {c: k for k, c in enumerate(cols)}
        block = {
            k: {col_pos[c]: v for c, v in m.row(r).items()} for k, r in enumerate(rows)
        }
        total += DomainMatrix(block, (len(rows), len(cols)), domain).rank()
    logger.debug("rank_computed", shape=m.shape, components=len(components), rank=total)
    return total


def _rref(m: Matrix) -> tuple[dict[int, dict[int, Any]], tuple[int, ...]]:
    """Reduced row echelon form as sparse rows plus the pivot columns.

    Row r has its pivot in column pivots[r].
    """
    if m.is_zero():
        return {}, ()
    reduced, pivots = m.to_domain_matrix().rref()
    sparse = reduced.to_sparse().rep
    return {r: dict(row) for r, row in sparse.items()}, tuple(pivots)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column in ascending order.

    Each vector has a 1 at its free column and 0 at every other free column.
    """
    zero, one = m.field.zero, m.field.one
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [zero] * m.cols
        vector[free] = one
        for r, pivot in enumerate(pivots):
            coefficient = reduced[r].get(free)
            if coefficient:
                vector[pivot] = -coefficient
        basis.append(vector)
    return basis


def solve_many(m: Matrix, rhs: Sequence[Vector]) -> list[Vector | None]:
    """Solve ``m x = b`` for every ``b`` in ``rhs`` with one elimination.

    Free variables are set to zero, so the particular solution is deterministic.
    Inconsistent systems yield None.
    """
    for b in rhs:
        if len(b) != m.rows:
            raise DimensionMismatchError("solve", m.rows, len(b))
    if not rhs:
        return []
    field = m.field
    width = m.cols + len(rhs)
    augmented: dict[int, dict[int, Any]] = {}
    for r, c, value in m.entries():
        augmented.setdefault(r, {})[c] = value
    for k, b in enumerate(rhs):
        for r, value in enumerate(b):
            scalar = field.element(value)
            if scalar:
                augmented.setdefault(r, {})[m.cols + k] = scalar
    if not augmented:
        return [[field.zero] * m.cols for _ in rhs]

    reduced, pivots = _rref(Matrix._trusted(m.rows, width, field, augmented))
    inconsistent: set[int] = set()
    for r, pivot in enumerate(pivots):
        if pivot >= m.cols:
            inconsistent.update(c - m.cols for c in reduced[r])

    solutions: list[Vector | None] = []
    for k in range(len(rhs)):
        if k in inconsistent:
            solutions.append(None)
            continue
        x = [field.zero] * m.cols
        for r, pivot in enumerate(pivots):
            if pivot >= m.cols:
                break
            value = reduced[r].get(m.cols + k)
            if value:
                x[pivot] = value
        solutions.append(x)
    return solutions


def solve(m: Matrix, b: Vector) -> Vector | None:
    """A particular solution of ``m x = b``, or None when the system is inconsistent."""
    return solve_many(m, [b])[0]


def transpose(m: Matrix) -> Matrix:
    entries: dict[int, dict[int, Any]] = {}
    for r, c, value in m.entries():
        entries.setdefault(c, {})[r] = value
    return Matrix._trusted(m.cols, m.rows, m.field, entries)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b, "multiply")
    if a.cols != b.rows:
        raise DimensionMismatchError("matmul", (a.cols, b.cols), (b.rows, b.cols))
    entries: dict[int, dict[int, Any]] = {}
    for r in range(a.rows):
        acc: dict[int, Any] = {}
        for k, left in a.row(r).items():
            for c, right in b.row(k).items():
                acc[c] = acc.get(c, a.field.zero) + left * right
        kept = {c: v for c, v in acc.items() if v}
        if kept:
            entries[r] = kept
    return Matrix._trusted(a.rows, b.cols, a.field, entries)


def apply(m: Matrix, v: Vector) -> Vector:
    """The product ``m v``."""
    if len(v) != m.cols:
        raise DimensionMismatchError("apply", m.cols, len(v))
    zero = m.field.zero
    out = [zero] * m.rows
    for r in range(m.rows):
        acc = zero
        for c, value in m.row(r).items():
            if v[c]:
                acc += value * v[c]
        out[r] = acc
    return out


def hstack(field: FieldSpec, rows: int, *blocks: Matrix) -> Matrix:
    """Concatenate matrices side by side; all blocks must have ``rows`` rows."""
    entries: dict[int, dict[int, Any]] = {}
    offset = 0
    for block in blocks:
        if block.field != field:
            raise IncompatibleOperandsError(
                f"Cannot stack a matrix over {block.field.label} into {field.label}",
                context={"operation": "hstack"},
            )
        if block.rows != rows:
            raise DimensionMismatchError("hstack", rows, block.rows)
        for r, c, value in block.entries():
            entries.setdefault(r, {})[offset + c] = value
        offset += block.cols
    return Matrix._trusted(rows, offset, field, entries)


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """Restriction to the given rows and columns, re-indexed in the given order."""
    col_pos = {c: k for k, c in enumerate(cols)}
    entries: dict[int, dict[int, Any]] = {}
    for k, r in enumerate(rows):
        kept = {col_pos[c]: v for c, v in m.row(r).items() if c in col_pos}
        if kept:
            entries[k] = kept
    return Matrix._trusted(len(rows), len(cols), m.field, entries)


def is_zero_vector(v: Vector) -> bool:
    return not any(v)
