"""Shared behaviour of finite-dimensional algebras given by structure constants."""

from hopfgalois.linalg import ONE, Mat, kron
from hopfgalois.linalg.matrix import SparseRow


class AlgebraStructure:
    """Mixin for objects with ``mult`` (n × n²) and ``unit`` (n × 1) matrices.

    The product e_i·e_j is column ``i*n + j`` of ``mult``.
    """

    mult: Mat
    unit: Mat

    @property
    def algebra_dim(self) -> int:
        return self.mult.rows

    def unit_vector(self) -> SparseRow:
        return dict(self.unit.sparse_columns()[0])

    def basis_vector(self, i: int) -> SparseRow:
        return {i: ONE}

    def multiply(self, a: SparseRow, b: SparseRow) -> SparseRow:
        """Product of two elements given as sparse coordinate vectors."""
        n = self.algebra_dim
        tensor = {i * n + j: x * y for i, x in a.items() for j, y in b.items()}
        return self.mult.apply_sparse(tensor)

    def left_matrix(self, a: SparseRow) -> Mat:
        """Matrix of x ↦ a·x."""
        n = self.algebra_dim
        column = Mat.from_sparse_columns(n, [a])
        return self.mult @ kron(column, Mat.identity(n))

    def right_matrix(self, a: SparseRow) -> Mat:
        """Matrix of x ↦ x·a."""
        n = self.algebra_dim
        column = Mat.from_sparse_columns(n, [a])
        return self.mult @ kron(Mat.identity(n), column)
