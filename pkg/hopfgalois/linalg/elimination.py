"""Rank, kernel, solving and quotient spaces over exact scalars."""

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from hopfgalois.core.exceptions import EngineDefectError, MalformedInputError
from hopfgalois.linalg.matrix import Mat, SparseRow, Vector, dense_vector, sparse_vector
from hopfgalois.linalg.scalar import ONE, Scalar
from hopfgalois.linalg.subspace import Subspace, gauss_jordan, rref


@dataclass(frozen=True)
class RowReduction:
    """Result of :func:`row_reduce`."""

    rank: int
    kernel: Subspace
    image: Subspace
    pivots: tuple[int, ...]


@dataclass(frozen=True)
class Quotient:
    """Quotient k^ambient_dim / relations with a chosen complement.

    ``section`` sends the i-th quotient basis vector to the standard basis
    vector of the i-th non-pivot column of the relations; ``project`` is
    the matching linear projection, annihilating exactly the relations.
    """

    dim: int
    project: Mat
    section: Mat
    relations: Subspace


def _kernel_from_rref(rows: list[SparseRow], pivots: list[int], ncols: int) -> Subspace:
    pivot_set = set(pivots)
    vectors: list[SparseRow] = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v: SparseRow = {f: ONE}
        for p, row in zip(pivots, rows):
            x = row.get(f)
            if x:
                v[p] = -x
        vectors.append(v)
    return Subspace(ncols, vectors)


def row_reduce(m: Mat) -> RowReduction:
    """Rank, kernel and image of a matrix, exactly and deterministically."""
    rows, pivots = rref(m.sparse_rows(), m.cols)
    return RowReduction(
        rank=len(pivots),
        kernel=_kernel_from_rref(rows, pivots, m.cols),
        image=Subspace.column_span(m),
        pivots=tuple(pivots),
    )


def rank(m: Mat) -> int:
    """Rank of a matrix."""
    _, pivots = rref(m.sparse_rows(), m.cols)
    return len(pivots)


def kernel(m: Mat) -> Subspace:
    """Kernel of a matrix as a subspace of k^cols."""
    rows, pivots = rref(m.sparse_rows(), m.cols)
    return _kernel_from_rref(rows, pivots, m.cols)


def solve_many(m: Mat, targets: Sequence[Mapping[int, Scalar]]) -> list[Optional[SparseRow]]:
    """Solve m·x = t for several sparse targets with one elimination.

    Each target rides along as an extra column that is never pivoted on,
    so every solution equals what :func:`solve` returns for it alone.
    """
    augmented = m.sparse_rows()
    for t, target in enumerate(targets):
        for i, v in target.items():
            if v:
                augmented[i][m.cols + t] = v
    reduced, pivots, leftover = gauss_jordan(augmented, m.cols)
    inconsistent = {c - m.cols for row in leftover for c in row}
    solutions: list[Optional[SparseRow]] = []
    for t in range(len(targets)):
        if t in inconsistent:
            solutions.append(None)
            continue
        column = m.cols + t
        solutions.append({p: row[column] for p, row in zip(pivots, reduced) if column in row})
    return solutions


def solve_sparse(m: Mat, target: Mapping[int, Scalar]) -> Optional[SparseRow]:
    """Sparse variant of :func:`solve`."""
    return solve_many(m, [target])[0]


def solve(m: Mat, target: Sequence) -> Optional[Vector]:
    """A solution x of m·x = target, or None when the system is inconsistent.

    Free variables are set to zero under the fixed pivot rule, so the
    returned solution is deterministic.
    """
    if len(target) != m.rows:
        raise MalformedInputError(
            f"Target of length {len(target)} for a matrix with {m.rows} rows"
        )
    solution = solve_sparse(m, sparse_vector(target))
    if solution is None:
        return None
    return dense_vector(solution, m.cols)


def quotient(ambient_dim: int, relations: Subspace) -> Quotient:
    """Quotient of k^ambient_dim by a subspace, with projection and section.

    Raises:
        MalformedInputError: If the relations live in another ambient space
        EngineDefectError: If project∘section is not the identity
    """
    if relations.ambient_dim != ambient_dim:
        raise MalformedInputError(
            f"Relations in dimension {relations.ambient_dim}, ambient {ambient_dim}"
        )
    pivot_set = set(relations.pivots)
    free = [c for c in range(ambient_dim) if c not in pivot_set]
    position = {c: i for i, c in enumerate(free)}

    section = Mat.from_sparse_columns(ambient_dim, [{c: ONE} for c in free])

    project_columns: list[SparseRow] = []
    rows_by_pivot = dict(zip(relations.pivots, relations.sparse_basis()))
    for c in range(ambient_dim):
        if c in position:
            project_columns.append({position[c]: ONE})
        else:
            row = rows_by_pivot[c]
            project_columns.append(
                {position[k]: -v for k, v in row.items() if k in position}
            )
    project = Mat.from_sparse_columns(len(free), project_columns)

    if project @ section != Mat.identity(len(free)):
        raise EngineDefectError("project∘section is not the identity on the quotient")
    return Quotient(dim=len(free), project=project, section=section, relations=relations)

