"""Exact matrices over cyclotomic scalars.

Storage is sparse (one dict per row, zero entries omitted); semantics are
dense. Matrices are immutable once built: every operation returns a new
instance.
"""

from math import lcm
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg.scalar import ONE, ZERO, Scalar

Vector = tuple[Scalar, ...]
SparseRow = dict[int, Scalar]


def axpy(target: SparseRow, factor: Scalar, source: Mapping[int, Scalar]) -> None:
    """In-place ``target += factor * source`` on sparse rows."""
    for k, v in source.items():
        current = target.get(k)
        value = factor * v if current is None else current + factor * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


def accumulate(target: SparseRow, index: int, value: Scalar) -> None:
    """In-place ``target[index] += value``, dropping a cancelled entry."""
    current = target.get(index)
    total = value if current is None else current + value
    if total:
        target[index] = total
    else:
        target.pop(index, None)


def sparse_vector(values: Iterable) -> SparseRow:
    """Sparse row from a dense sequence of scalar-like values."""
    row: SparseRow = {}
    for i, v in enumerate(values):
        s = Scalar.coerce(v)
        if s:
            row[i] = s
    return row


def dense_vector(row: Mapping[int, Scalar], length: int) -> Vector:
    """Dense tuple of scalars from a sparse row."""
    return tuple(row.get(i, ZERO) for i in range(length))


class Mat:
    """Exact rows × cols matrix."""

    __slots__ = ("rows", "cols", "_data")

    rows: int
    cols: int
    _data: tuple[SparseRow, ...]

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[tuple[int, int], object]] = None,
    ):
        """
        Build a matrix from a mapping ``(i, j) -> value``.

        Raises:
            MalformedInputError: If a dimension is negative or an index is out of range
        """
        if rows < 0 or cols < 0:
            raise MalformedInputError(f"Invalid matrix shape {rows}x{cols}")
        data: list[SparseRow] = [{} for _ in range(rows)]
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise MalformedInputError(
                    f"Entry ({i}, {j}) out of range for {rows}x{cols} matrix"
                )
            s = Scalar.coerce(value)
            if s:
                data[i][j] = s
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)

    @classmethod
    def _from_sparse(cls, rows: int, cols: int, data: Sequence[SparseRow]) -> "Mat":
        obj = object.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj._data = tuple(data)
        return obj

    # Constructors

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        """Zero matrix."""
        return cls._from_sparse(rows, cols, [{} for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        """n × n identity."""
        return cls._from_sparse(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Mat":
        """Matrix from dense rows of scalar-like values."""
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        data = []
        for r in rows:
            if len(r) != width:
                raise MalformedInputError("Rows of unequal length")
            data.append(sparse_vector(r))
        return cls._from_sparse(len(rows), width, data)

    @classmethod
    def from_sparse_rows(cls, rows: int, cols: int, data: Sequence[Mapping[int, Scalar]]) -> "Mat":
        """Matrix from sparse rows; zero entries are dropped."""
        if len(data) != rows:
            raise MalformedInputError("Row count does not match data")
        clean = []
        for row in data:
            if any(not 0 <= j < cols for j in row):
                raise MalformedInputError("Column index out of range")
            clean.append({j: v for j, v in row.items() if v})
        return cls._from_sparse(rows, cols, clean)

    @classmethod
    def from_sparse_columns(
        cls, rows: int, columns: Sequence[Mapping[int, Scalar]]
    ) -> "Mat":
        """Matrix whose j-th column is the j-th sparse vector."""
        data: list[SparseRow] = [{} for _ in range(rows)]
        for j, column in enumerate(columns):
            for i, v in column.items():
                if v:
                    data[i][j] = v
        return cls._from_sparse(rows, len(columns), data)

    @classmethod
    def hstack(cls, *mats: "Mat") -> "Mat":
        """Concatenate matrices left to right."""
        rows = mats[0].rows
        data: list[SparseRow] = [{} for _ in range(rows)]
        offset = 0
        for m in mats:
            if m.rows != rows:
                raise MalformedInputError("hstack of matrices with different row counts")
            for i, row in enumerate(m._data):
                for j, v in row.items():
                    data[i][offset + j] = v
            offset += m.cols
        return cls._from_sparse(rows, offset, data)

    @classmethod
    def vstack(cls, *mats: "Mat") -> "Mat":
        """Concatenate matrices top to bottom."""
        cols = mats[0].cols
        data: list[SparseRow] = []
        for m in mats:
            if m.cols != cols:
                raise MalformedInputError("vstack of matrices with different column counts")
            data.extend(dict(row) for row in m._data)
        return cls._from_sparse(len(data), cols, data)

    # Access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def conductor(self) -> int:
        """Least common conductor of all entries."""
        n = 1
        for row in self._data:
            for v in row.values():
                n = lcm(n, v.conductor)
        return n

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._data[i].get(j, ZERO)

    def row(self, i: int) -> Mapping[int, Scalar]:
        """Read-only sparse view of row i."""
        return MappingProxyType(self._data[i])

    def sparse_rows(self) -> list[SparseRow]:
        """Copies of the sparse rows."""
        return [dict(r) for r in self._data]

    def sparse_columns(self) -> list[SparseRow]:
        """Sparse columns (copies)."""
        columns: list[SparseRow] = [{} for _ in range(self.cols)]
        for i, row in enumerate(self._data):
            for j, v in row.items():
                columns[j][i] = v
        return columns

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        """Nonzero entries in row-major order."""
        for i, row in enumerate(self._data):
            for j in sorted(row):
                yield i, j, row[j]

    def is_zero(self) -> bool:
        return not any(self._data)

    # Algebra

    def transpose(self) -> "Mat":
        return Mat._from_sparse(self.cols, self.rows, self.sparse_columns())

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise MalformedInputError(
                f"Cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        data: list[SparseRow] = []
        for row in self._data:
            acc: SparseRow = {}
            for k, a in row.items():
                other_row = other._data[k]
                if other_row:
                    axpy(acc, a, other_row)
            data.append(acc)
        return Mat._from_sparse(self.rows, other.cols, data)

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times dense vector."""
        if len(vector) != self.cols:
            raise MalformedInputError("Vector length does not match matrix columns")
        v = sparse_vector(vector)
        return tuple(
            sum((a * v[k] for k, a in row.items() if k in v), ZERO) for row in self._data
        )

    def apply_sparse(self, vector: Mapping[int, Scalar]) -> SparseRow:
        """Matrix times sparse vector, sparse result."""
        result: SparseRow = {}
        for i, row in enumerate(self._data):
            acc = ZERO
            for k, a in row.items():
                x = vector.get(k)
                if x is not None:
                    acc = acc + a * x
            if acc:
                result[i] = acc
        return result

    def _combine(self, other: "Mat", sign: Scalar) -> "Mat":
        if self.shape != other.shape:
            raise MalformedInputError(f"Shape mismatch {self.shape} vs {other.shape}")
        data = self.sparse_rows()
        for acc, row in zip(data, other._data):
            axpy(acc, sign, row)
        return Mat._from_sparse(self.rows, self.cols, data)

    def __add__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        return self._combine(other, ONE)

    def __sub__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        return self._combine(other, -ONE)

    def __neg__(self) -> "Mat":
        return self.scale(-ONE)

    def scale(self, factor) -> "Mat":
        """Multiply every entry by a scalar."""
        f = Scalar.coerce(factor)
        if not f:
            return Mat.zeros(self.rows, self.cols)
        return Mat._from_sparse(
            self.rows, self.cols, [{j: f * v for j, v in row.items()} for row in self._data]
        )

    def conjugate(self) -> "Mat":
        """Entrywise complex conjugate."""
        return Mat._from_sparse(
            self.rows, self.cols, [{j: v.conjugate() for j, v in row.items()} for row in self._data]
        )

    def select_columns(self, indices: Sequence[int]) -> "Mat":
        """Sub-matrix made of the given columns, in the given order."""
        position = {j: n for n, j in enumerate(indices)}
        data = [
            {position[j]: v for j, v in row.items() if j in position} for row in self._data
        ]
        return Mat._from_sparse(self.rows, len(indices), data)

    # Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: "Mat") -> Optional[tuple[int, int]]:
        """First (row, col) in row-major order where the matrices differ."""
        if self.shape != other.shape:
            raise MalformedInputError(f"Shape mismatch {self.shape} vs {other.shape}")
        for i, (a, b) in enumerate(zip(self._data, other._data)):
            if a != b:
                for j in sorted(set(a) | set(b)):
                    if a.get(j, ZERO) != b.get(j, ZERO):
                        return (i, j)
        return None

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, nnz={sum(len(r) for r in self._data)})"


def kron(a: Mat, b: Mat) -> Mat:
    """Tensor product of linear maps on the lexicographic tensor basis.

    Row (i, k) ↦ i·b.rows + k, column (j, l) ↦ j·b.cols + l.
    """
    data: list[SparseRow] = []
    for arow in a._data:
        for brow in b._data:
            row: SparseRow = {}
            if arow and brow:
                for j, x in arow.items():
                    base = j * b.cols
                    for l, y in brow.items():
                        row[base + l] = x * y
            data.append(row)
    return Mat._from_sparse(a.rows * b.rows, a.cols * b.cols, data)


def swap(m: int, n: int) -> Mat:
    """Flip V⊗W → W⊗V for dim V = m, dim W = n."""
    data: list[SparseRow] = [{} for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            data[j * m + i][i * n + j] = ONE
    return Mat._from_sparse(m * n, m * n, data)
