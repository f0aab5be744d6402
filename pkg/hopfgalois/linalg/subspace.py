"""Subspaces in canonical reduced echelon form."""

from typing import Iterable, Mapping, Optional, Sequence, Union

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg.matrix import Mat, SparseRow, Vector, axpy, dense_vector, sparse_vector
from hopfgalois.linalg.scalar import Scalar

VectorLike = Union[Sequence, Mapping[int, Scalar]]


def gauss_jordan(
    rows: Iterable[Mapping[int, Scalar]], pivot_limit: int
) -> tuple[list[SparseRow], list[int], list[SparseRow]]:
    """Gauss-Jordan elimination with the fixed pivot rule.

    Columns below ``pivot_limit`` are scanned left to right; the pivot row
    for a column is the first remaining row (in input order) with a nonzero
    entry there. Pivot entries are normalised to 1 and cleared from every
    other row. Entries at or beyond ``pivot_limit`` are carried along but
    never pivoted on.

    Returns:
        (reduced rows ordered by pivot column, pivot columns, leftover rows
        that are zero below ``pivot_limit`` but not zero overall)
    """
    remaining = [dict(r) for r in rows if r]
    reduced: list[SparseRow] = []
    pivots: list[int] = []
    for c in range(pivot_limit):
        if not remaining:
            break
        index = next((i for i, r in enumerate(remaining) if c in r), None)
        if index is None:
            continue
        pivot_row = remaining.pop(index)
        inverse = pivot_row[c].inverse()
        pivot_row = {k: v * inverse for k, v in pivot_row.items()}
        for r in remaining:
            if c in r:
                axpy(r, -r[c], pivot_row)
        for r in reduced:
            if c in r:
                axpy(r, -r[c], pivot_row)
        remaining = [r for r in remaining if r]
        reduced.append(pivot_row)
        pivots.append(c)
    return reduced, pivots, remaining


def rref(rows: Iterable[Mapping[int, Scalar]], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Unique reduced echelon form of the row space.

    Returns:
        (reduced rows ordered by pivot column, pivot columns)
    """
    reduced, pivots, _ = gauss_jordan(rows, ncols)
    return reduced, pivots


def _as_sparse(vector: VectorLike, ambient_dim: int) -> SparseRow:
    if isinstance(vector, Mapping):
        row = {k: Scalar.coerce(v) for k, v in vector.items()}
        row = {k: v for k, v in row.items() if v}
        if any(not 0 <= k < ambient_dim for k in row):
            raise MalformedInputError("Vector index out of range")
        return row
    if len(vector) != ambient_dim:
        raise MalformedInputError(
            f"Vector of length {len(vector)} in ambient dimension {ambient_dim}"
        )
    return sparse_vector(vector)


class Subspace:
    """Subspace of k^ambient_dim stored as a canonical reduced echelon basis.

    Two subspaces are equal exactly when their bases are equal.
    """

    __slots__ = ("ambient_dim", "_rows", "_pivots")

    ambient_dim: int
    _rows: tuple[SparseRow, ...]
    _pivots: tuple[int, ...]

    def __init__(self, ambient_dim: int, vectors: Iterable[VectorLike] = ()):
        if ambient_dim < 0:
            raise MalformedInputError("Negative ambient dimension")
        rows, pivots = rref((_as_sparse(v, ambient_dim) for v in vectors), ambient_dim)
        self.ambient_dim = ambient_dim
        self._rows = tuple(rows)
        self._pivots = tuple(pivots)

    @classmethod
    def _from_rref(cls, ambient_dim: int, rows: Sequence[SparseRow], pivots: Sequence[int]) -> "Subspace":
        obj = object.__new__(cls)
        obj.ambient_dim = ambient_dim
        obj._rows = tuple(rows)
        obj._pivots = tuple(pivots)
        return obj

    @classmethod
    def column_span(cls, m: Mat) -> "Subspace":
        """Image of a matrix (span of its columns)."""
        rows, pivots = rref(m.sparse_columns(), m.rows)
        return cls._from_rref(m.rows, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls._from_rref(ambient_dim, [], [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls._from_rref(
            ambient_dim, [{i: Scalar.rational(1)} for i in range(ambient_dim)], range(ambient_dim)
        )

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def basis(self) -> tuple[Vector, ...]:
        """Dense basis vectors."""
        return tuple(dense_vector(r, self.ambient_dim) for r in self._rows)

    def sparse_basis(self) -> list[SparseRow]:
        return [dict(r) for r in self._rows]

    def as_rows(self) -> Mat:
        """dim × ambient matrix whose rows are the basis."""
        return Mat.from_sparse_rows(self.dim, self.ambient_dim, self._rows)

    def as_columns(self) -> Mat:
        """ambient × dim matrix whose columns are the basis."""
        return Mat.from_sparse_columns(self.ambient_dim, self._rows)

    def reduce(self, vector: VectorLike) -> SparseRow:
        """Remainder of a vector after clearing the pivot coordinates."""
        v = _as_sparse(vector, self.ambient_dim)
        for p, row in zip(self._pivots, self._rows):
            coefficient = v.get(p)
            if coefficient is not None:
                axpy(v, -coefficient, row)
        return v

    def contains(self, vector: VectorLike) -> bool:
        return not self.reduce(vector)

    def coordinates(self, vector: VectorLike) -> Optional[Vector]:
        """Coordinates in the canonical basis, or None when outside the subspace."""
        v = _as_sparse(vector, self.ambient_dim)
        if self.reduce(v):
            return None
        return tuple(v.get(p, Scalar.rational(0)) for p in self._pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        return all(other.contains(r) for r in self._rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise MalformedInputError("Sum of subspaces in different ambient spaces")
        return Subspace(self.ambient_dim, [*self._rows, *other._rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"
