"""Unit tests for bundle models and their derived objects."""

from dataclasses import replace

import pytest

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg import ONE, Mat
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.services.corpus_service import example, example_bundle


class TestBundleModel:
    """Tests for Bundle validation and sizes."""

    def test_sizes(self, z2_free_4):
        """Test tensor and target dimensions of the 4-point bundle."""
        p = z2_free_4.bundle
        assert p.total_dim == 4
        assert p.tensor_dim == 16
        assert p.target_dim == 8

    def test_coaction_shape_checked(self, z2_free_4):
        """Test that the coaction must be (n·dim A) × n."""
        with pytest.raises(MalformedInputError, match="coaction of bundle"):
            replace(z2_free_4.bundle, coaction=Mat.zeros(4, 4))

    def test_equality_ignores_labels(self, z2_free_4):
        """Test that bundles compare by structure, not by names."""
        p = z2_free_4.bundle
        assert replace(p, name="renamed", basis_labels=("a", "b", "c", "d")) == p
        assert p != example_bundle("z2-nonfree-3")


class TestTranslationTable:
    """Tests for TranslationTable helpers."""

    def setup_method(self):
        """Set up a solved table on the Z/2 regular bundle."""
        self.service = BundleService(example_bundle("z2-regular"))
        self.table = self.service.translation_map_solve()

    def test_as_matrix_columns(self):
        """Test that column a of the matrix is τ(h_a)."""
        m = self.table.as_matrix()
        assert m.shape == (self.table.tensor.dim, 2)
        assert m.sparse_columns() == [dict(v) for v in self.table.values]

    def test_with_value_and_first_difference(self):
        """Test that replacing a value is reported as the first difference."""
        altered = self.table.with_value(1, {0: ONE}, method="edited")
        assert altered.method == "edited"
        assert self.table.first_difference(altered) == 1
        assert self.table.first_difference(self.table) is None
        assert altered != self.table

    def test_equality_ignores_method(self):
        """Test that tables with equal values compare equal."""
        relabeled = self.table.with_value(0, self.table.values[0], method="pw")
        assert relabeled == self.table


class TestPeterWeylDecomposition:
    """Tests for decomposition totals."""

    def test_complete_for_regular_s3(self):
        """Test that S3 regular decomposes as 1 + 1 + 2·2."""
        ex = example("s3-regular")
        decomposition = BundleService(ex.bundle).peter_weyl_decompose(ex.irreps)
        assert decomposition.total == 6
        assert decomposition.complete
        assert [c.dim for c in decomposition.components] == [1, 1, 4]
