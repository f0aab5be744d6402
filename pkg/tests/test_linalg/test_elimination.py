"""Unit tests for hopfgalois.linalg.subspace and hopfgalois.linalg.elimination."""

from fractions import Fraction

import pytest
from sympy import Matrix

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg import (
    ONE,
    Mat,
    Scalar,
    Subspace,
    kernel,
    kron,
    quotient,
    rank,
    row_reduce,
    solve,
    solve_many,
)

# Rows 4 and 5 are sums of earlier rows.
DEPENDENT_ROWS = [
    [2, -1, 0, 3, 1, 0],
    [0, 1, 4, -2, 0, 5],
    [1, 0, -3, 1, 2, 2],
    [3, 3, 1, 0, -1, 1],
    [2, 0, 4, 1, 1, 5],
    [4, 3, -2, 1, 1, 3],
]


class TestRankAndKernel:
    """Tests for rank, kernel and image."""

    def test_rank_matches_sympy(self):
        """Test exact rank against an independent computation."""
        assert rank(Mat.from_rows(DEPENDENT_ROWS)) == Matrix(DEPENDENT_ROWS).rank()

    def test_rank_nullity(self):
        """Test rank + dim ker = number of columns."""
        m = Mat.from_rows(DEPENDENT_ROWS)
        reduction = row_reduce(m)
        assert reduction.rank + reduction.kernel.dim == m.cols
        assert reduction.image.dim == reduction.rank

    def test_kernel_vectors_are_annihilated(self):
        """Test m·v = 0 for every kernel basis vector."""
        m = Mat.from_rows(DEPENDENT_ROWS)
        for v in kernel(m).sparse_basis():
            assert m.apply_sparse(v) == {}

    def test_rank_over_cyclotomic_field(self):
        """Test that [[1, ζ], [ζ², 1]] is singular over Q(ζ_3)."""
        z = Scalar.zeta(3)
        m = Mat(2, 2, {(0, 0): 1, (0, 1): z, (1, 0): z * z, (1, 1): 1})
        assert rank(m) == 1

    def test_zero_matrix(self):
        """Test rank 0 and full kernel."""
        assert rank(Mat.zeros(3, 4)) == 0
        assert kernel(Mat.zeros(3, 4)) == Subspace.full(4)


class TestSolve:
    """Tests for linear solving."""

    def test_solution_satisfies_system(self):
        """Test that a consistent system is solved exactly."""
        m = Mat.from_rows(DEPENDENT_ROWS)
        target = m.apply([1, 2, 3, 4, 5, 6])
        x = solve(m, target)
        assert x is not None
        assert m.apply(x) == target

    def test_inconsistent_system_returns_none(self):
        """Test that absence of a solution is a value, not an error."""
        m = Mat.from_rows([[1, 1], [2, 2]])
        assert solve(m, [1, 0]) is None

    def test_solve_many_matches_solve(self):
        """Test that batched solving equals one-at-a-time solving."""
        m = Mat.from_rows(DEPENDENT_ROWS)
        targets = [m.apply_sparse({k: ONE}) for k in range(6)] + [{0: ONE}]
        batched = solve_many(m, targets)
        for target, x in zip(targets, batched):
            single = solve(m, [target.get(i, Scalar.rational(0)) for i in range(6)])
            if single is None:
                assert x is None
            else:
                assert [x.get(i, Scalar.rational(0)) for i in range(6)] == list(single)

    def test_solution_agrees_with_sympy(self):
        """Test a unique solution against sympy."""
        rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        x = solve(Mat.from_rows(rows), [1, 2, 3])
        expected = Matrix(rows).LUsolve(Matrix([1, 2, 3]))
        assert [c.to_fraction() for c in x] == [Fraction(int(v.p), int(v.q)) for v in expected]

    def test_target_length_mismatch_raises(self):
        """Test that a target of the wrong length is malformed."""
        with pytest.raises(MalformedInputError):
            solve(Mat.identity(2), [1, 2, 3])


class TestSubspace:
    """Tests for canonical subspaces."""

    def test_equal_spans_are_equal(self):
        """Test that different generating sets of one space compare equal."""
        a = Subspace(3, [[1, 1, 0], [0, 1, 1]])
        b = Subspace(3, [[1, 2, 1], [1, 0, -1]])
        assert a == b
        assert a.dim == 2

    def test_contains_and_coordinates(self):
        """Test membership and canonical coordinates."""
        s = Subspace(3, [[1, 0, 2], [0, 1, 3]])
        assert s.contains([2, 1, 7])
        assert not s.contains([0, 0, 1])
        assert s.coordinates([2, 1, 7]) == (Scalar.rational(2), Scalar.rational(1))
        assert s.coordinates([0, 0, 1]) is None

    def test_sum_and_inclusion(self):
        """Test subspace sum and the inclusion order."""
        x = Subspace(3, [[1, 0, 0]])
        y = Subspace(3, [[0, 1, 0]])
        assert (x + y).dim == 2
        assert x.is_subspace_of(x + y)
        assert not (x + y).is_subspace_of(x)

    def test_vector_of_wrong_length_raises(self):
        """Test that vectors must live in the ambient space."""
        with pytest.raises(MalformedInputError):
            Subspace(3, [[1, 0]])


class TestQuotient:
    """Tests for quotient spaces."""

    def test_projection_annihilates_relations(self):
        """Test project∘section = id and project(relations) = 0."""
        relations = Subspace(4, [[1, -1, 0, 0], [0, 0, 1, -1]])
        q = quotient(4, relations)
        assert q.dim == 2
        assert q.project @ q.section == Mat.identity(2)
        assert (q.project @ relations.as_columns()).is_zero()

    def test_ambient_mismatch_raises(self):
        """Test that relations must live in the given ambient space."""
        with pytest.raises(MalformedInputError):
            quotient(3, Subspace(4))


class TestRankIdentities:
    """Tests for rank under transpose and tensor products."""

    def test_rank_of_transpose(self):
        """Test that row rank equals column rank."""
        m = Mat.from_rows(DEPENDENT_ROWS[:5])
        assert m.transpose().shape == (6, 5)
        assert rank(m.transpose()) == rank(m)

    def test_rank_of_transpose_over_cyclotomic_field(self):
        """Test rank(mᵀ) = rank(m) on a rectangular matrix with ζ_4 entries."""
        i = Scalar.zeta(4)
        m = Mat.from_rows([[1, i, 0], [i, -1, 0]])
        assert rank(m) == rank(m.transpose()) == 1

    def test_rank_of_tensor_product(self):
        """Test rank(a⊗b) = rank(a)·rank(b)."""
        a = Mat.from_rows([[1, 1], [2, 2], [0, 1]])
        b = Mat.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        result = kron(a, b)
        assert result.shape == (9, 6)
        assert rank(result) == rank(a) * rank(b) == 4

    def test_tensor_with_zero_has_rank_zero(self):
        """Test that a zero factor kills the tensor product."""
        assert rank(kron(Mat.zeros(2, 3), Mat.identity(4))) == 0


class TestSolveFreeVariables:
    """Tests for the deterministic choice among many solutions."""

    def test_free_variables_are_zero(self):
        """Test that [[1,1],[1,1]]·x = (2,2) returns (2,0)."""
        x = solve(Mat.from_rows([[1, 1], [1, 1]]), [2, 2])
        assert x == (Scalar.rational(2), Scalar.rational(0))

    def test_zero_target_gives_zero_solution(self):
        """Test that a homogeneous system returns the zero vector."""
        x = solve(Mat.from_rows(DEPENDENT_ROWS), [0] * 6)
        assert x == (Scalar.rational(0),) * 6


class TestQuotientBoundaries:
    """Tests for quotients by no relations and by everything."""

    def test_empty_relations(self):
        """Test that dividing by zero relations gives the identity maps."""
        q = quotient(3, Subspace.zero(3))
        assert q.dim == 3
        assert q.project == Mat.identity(3)
        assert q.section == Mat.identity(3)

    def test_full_relations(self):
        """Test that dividing by everything gives dimension 0 and a (0, n) projection."""
        q = quotient(3, Subspace.full(3))
        assert q.dim == 0
        assert q.project.shape == (0, 3)
        assert q.section.shape == (3, 0)
