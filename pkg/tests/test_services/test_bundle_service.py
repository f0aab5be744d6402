"""Tests for the Galois-theoretic bundle operations."""

from dataclasses import replace

import pytest

from hopfgalois.core.exceptions import (
    IncompleteIrrepsError,
    NotGaloisError,
    NotPrincipalError,
    PreconditionError,
)
from hopfgalois.linalg import ONE, Mat, Scalar, kron
from hopfgalois.services.bundle_service import BundleService, map_ordered
from hopfgalois.services.corpus_service import cyclic_characters, example, trivial_bundle
from hopfgalois.services.hopf_service import antipode_translation_oracle, trivial_corep
from hopfgalois.utils.context import get_context, set_context

FREE_EXAMPLES = [
    "z2-regular",
    "z2-free-4",
    "z3-regular",
    "s3-regular",
    pytest.param("s3-free-12", marks=pytest.mark.slow),
]


class TestMapOrdered:
    """Tests for the per-irrep worker pool."""

    def test_preserves_order(self):
        """Test that threaded results come back in input order."""
        items = list(range(20))
        assert map_ordered(lambda x: x * x, items, threads=4) == [x * x for x in items]

    def test_context_reaches_workers(self):
        """Test that workers see the caller's run id."""
        set_context(run_id="run-1")
        assert map_ordered(lambda _: get_context().get("run_id"), [1, 2, 3], threads=3) == ["run-1"] * 3


class TestBundleAxioms:
    """Tests for check_bundle."""

    def test_corpus_bundle_passes(self, z2_free_4):
        """Test the axioms and the base dimension on the 4-point bundle."""
        report = BundleService(z2_free_4.bundle).check_bundle()
        assert report.ok
        assert report.base_dim == 2

    def test_scaled_coaction_fails_counit(self, z2_free_4):
        """Test that doubling F breaks the counit law."""
        p = z2_free_4.bundle
        report = BundleService(replace(p, coaction=p.coaction.scale(2))).check_bundle()
        assert not report.ok
        assert report.base_dim is None
        assert "coaction_counit" in [v.axiom for v in report.violations]


class TestCanonicalMap:
    """Tests for the base, B⊗_V B and the canonical map."""

    def test_free_four_points(self, z2_free_4):
        """Test dim V = 2, dim B⊗_V B = 8 and rank X = 8."""
        service = BundleService(z2_free_4.bundle)
        assert service.fixed_subalgebra.dim == 2
        assert service.tensor_over_base.dim == 8
        report = service.galois_check()
        assert report.bijective
        assert report.rank == 8
        assert service.freeness_check().surjective

    def test_non_free_control(self, z2_nonfree_3):
        """Test that the fixed point leaves X injective but not surjective."""
        service = BundleService(z2_nonfree_3.bundle)
        assert service.fixed_subalgebra.dim == 2
        freeness = service.freeness_check()
        assert not freeness.surjective
        assert (freeness.rank, freeness.target_dim, freeness.cokernel_dim) == (5, 6, 1)
        galois = service.galois_check()
        assert not galois.bijective
        assert galois.tensor_dim == 5
        assert galois.kernel_dim == 0

    @pytest.mark.parametrize("name, order", [("z2-regular", 2), ("z3-regular", 3), ("s3-regular", 6)])
    def test_regular_bundles(self, name, order):
        """Test V = k·1 and dim B⊗_V B = |G|² on regular actions."""
        service = BundleService(example(name).bundle)
        assert service.fixed_subalgebra.dim == 1
        assert service.tensor_over_base.dim == order * order

    def test_s3_free_twelve_tensor_dim(self):
        """Test dim B⊗_V B = 72 for two copies of the regular S3 action."""
        service = BundleService(example("s3-free-12").bundle)
        assert service.tensor_over_base.dim == 72

    def test_sweedler_trivial_bundle(self, sweedler_trivial):
        """Test that B = A over Sweedler's algebra is Galois with identity quotient."""
        service = BundleService(sweedler_trivial.bundle)
        tensor = service.tensor_over_base
        assert tensor.dim == 16
        assert tensor.project.shape == (16, 16)
        assert tensor.project == tensor.section
        report = service.galois_check()
        assert report.bijective
        assert report.rank == 16


class TestPeterWeyl:
    """Tests for the isotypic decomposition."""

    @pytest.mark.parametrize("name, total", [("z2-regular", 2), ("z2-free-4", 4), ("s3-regular", 6)])
    def test_complete(self, name, total):
        """Test Σ dim bim(α)·dim H_α = dim B."""
        ex = example(name)
        report = BundleService(ex.bundle).peter_weyl_report(ex.irreps)
        assert report.complete
        assert report.total == total

    def test_standard_multiplicity(self):
        """Test that the standard corep of S3 occurs twice in the regular bundle."""
        ex = example("s3-regular")
        report = BundleService(ex.bundle).peter_weyl_report(ex.irreps)
        assert [c.multiplicity for c in report.components] == [1, 1, 2]

    def test_omitting_an_irrep(self):
        """Test that dropping the standard corep makes the list incomplete."""
        ex = example("s3-regular")
        report = BundleService(ex.bundle).peter_weyl_report(ex.irreps[:2])
        assert report.total == 2
        assert not report.complete

    def test_non_free_control_decomposes(self, z2_nonfree_3):
        """Test multiplicities 2 and 1 on the three points."""
        report = BundleService(z2_nonfree_3.bundle).peter_weyl_report(z2_nonfree_3.irreps)
        assert report.complete
        assert report.total == 3
        assert [c.multiplicity for c in report.components] == [2, 1]

    def test_foreign_irrep_rejected(self, z2_free_4):
        """Test that coreps over another Hopf algebra are refused."""
        with pytest.raises(PreconditionError):
            BundleService(z2_free_4.bundle).intertwiner_space(cyclic_characters(3)[1])


class TestDualBases:
    """Tests for dual bases of intertwiners."""

    def test_pairs_exist_on_free_bundle(self, z2_free_4):
        """Test that each character of Z/2 has dual bases."""
        service = BundleService(z2_free_4.bundle)
        for u in z2_free_4.irreps:
            assert service.dual_bases(u).pairs

    def test_sign_is_not_principal_on_control(self, z2_nonfree_3):
        """Test that the sign block of the non-free action has no dual bases."""
        service = BundleService(z2_nonfree_3.bundle)
        with pytest.raises(NotPrincipalError):
            service.dual_bases(z2_nonfree_3.irreps[1])

    def test_requires_involutive_antipode(self, sweedler_trivial):
        """Test that S² ≠ id is refused."""
        service = BundleService(sweedler_trivial.bundle)
        with pytest.raises(PreconditionError, match="S²"):
            service.dual_bases(trivial_corep(sweedler_trivial.hopf))


class TestTranslationMap:
    """Tests for both translation-map constructors and their verification."""

    @pytest.mark.parametrize("name", FREE_EXAMPLES)
    def test_pw_table_inverts_canonical_map(self, name):
        """Test X∘τ = id and τ∘X = id for the dual-bases table."""
        ex = example(name)
        service = BundleService(ex.bundle)
        table = service.translation_map_pw(ex.irreps)
        report = service.verify_inverse(table, ex.irreps)
        assert report.x_tau_is_id
        assert report.tau_x_is_id
        assert report.lemma == "passed"
        assert report.holds

    @pytest.mark.parametrize("name", FREE_EXAMPLES)
    def test_constructors_agree(self, name):
        """Test that the dual-bases and solved tables are identical."""
        ex = example(name)
        service = BundleService(ex.bundle)
        pw = service.translation_map_pw(ex.irreps)
        solved = service.translation_map_solve()
        assert pw.first_difference(solved) is None
        assert pw == solved

    def test_threads_do_not_change_results(self):
        """Test that a worker pool yields the same table."""
        ex = example("s3-regular")
        single = BundleService(ex.bundle, threads=1).translation_map_pw(ex.irreps)
        pooled = BundleService(ex.bundle, threads=3).translation_map_pw(ex.irreps)
        assert single == pooled

    def test_sweedler_matches_antipode_oracle(self, sweedler_trivial):
        """Test τ(h) = S(h⁽¹⁾)⊗h⁽²⁾ on all four basis elements."""
        service = BundleService(sweedler_trivial.bundle)
        table = service.translation_map_solve()
        oracle = service.tensor_over_base.project @ antipode_translation_oracle(sweedler_trivial.hopf)
        assert table.as_matrix() == oracle
        report = service.verify_inverse(table)
        assert report.holds
        assert report.lemma == "skipped"

    def test_sweedler_refuses_pw(self, sweedler_trivial):
        """Test that the dual-bases path needs S² = id."""
        service = BundleService(sweedler_trivial.bundle)
        with pytest.raises(PreconditionError):
            service.translation_map_pw([trivial_corep(sweedler_trivial.hopf)])

    def test_solve_fails_on_non_free_control(self, z2_nonfree_3):
        """Test that τ cannot be solved for when X is not bijective."""
        with pytest.raises(NotGaloisError):
            BundleService(z2_nonfree_3.bundle).translation_map_solve()

    def test_pw_needs_a_complete_list(self):
        """Test that a missing irrep is refused."""
        ex = example("s3-regular")
        with pytest.raises(IncompleteIrrepsError):
            BundleService(ex.bundle).translation_map_pw(ex.irreps[:2])

    def test_altered_table_fails_verification(self):
        """Test that a corrupted τ value is detected."""
        ex = example("z2-regular")
        service = BundleService(ex.bundle)
        table = service.translation_map_solve()
        broken = table.with_value(0, table.values[1])
        report = service.verify_inverse(broken)
        assert not report.holds
        assert report.x_tau_witness is not None


class TestTrivialFunctionBundle:
    """Tests for B = A = k^{Z/2} with F = Δ."""

    def setup_method(self):
        """Set up the bundle and its two characters."""
        self.bundle = trivial_bundle(example("z2-regular").hopf)
        self.trivial, self.sign = cyclic_characters(2, self.bundle.hopf)
        self.service = BundleService(self.bundle)

    def test_base_is_the_scalars(self):
        """Test V = k·1 and B⊗_V B = B⊗B."""
        assert self.service.fixed_subalgebra.dim == 1
        tensor = self.service.tensor_over_base
        assert tensor.dim == 4
        assert tensor.project == Mat.identity(4)

    def test_dual_bases_are_the_character_itself(self):
        """Test that the sign character gives the single pair ν = μ = χ."""
        chi = Mat.from_rows([[1, -1]])
        assert self.service.dual_bases(self.sign).pairs == ((chi, chi),)
        one = Mat.from_rows([[1, 1]])
        assert self.service.dual_bases(self.trivial).pairs == ((one, one),)

    def test_translation_of_the_character(self):
        """Test τ(χ) = χ⊗χ for both constructors."""
        expected = tuple(Scalar.rational(v) for v in (1, -1, -1, 1))
        pw = self.service.translation_map_pw([self.trivial, self.sign])
        solved = self.service.translation_map_solve()
        assert pw == solved
        assert pw.as_matrix().apply([1, -1]) == expected


class TestIntertwinerDimensions:
    """Tests for dimensions of intertwiner spaces."""

    @pytest.mark.parametrize(
        "name, base_dim",
        [("z2-regular", 1), ("z2-free-4", 2), ("z2-nonfree-3", 2), ("s3-regular", 1), ("sweedler-trivial", 1)],
    )
    def test_trivial_corep_gives_the_base(self, name, base_dim):
        """Test dim bim(trivial) = dim V."""
        ex = example(name)
        service = BundleService(ex.bundle)
        assert service.intertwiner_space(trivial_corep(ex.hopf)).dim == service.fixed_subalgebra.dim == base_dim

    def test_rational_irrep_alone_is_incomplete(self):
        """Test that Z/3 acting on itself needs its complex characters."""
        ex = example("z3-regular")
        report = BundleService(ex.bundle).peter_weyl_report(ex.irreps[:1])
        assert not report.complete
        assert report.total == 1
        assert report.evaluation_rank == 1


class TestTranslationExtension:
    """Tests for τ extended to B⊗A."""

    def test_extension_is_left_linear(self, z2_free_4):
        """Test τ(bb′⊗h) = (b⊗1)·τ(b′⊗h) in B⊗_V B."""
        p = z2_free_4.bundle
        service = BundleService(p)
        t = service.tensor_over_base
        tau = service.tau_extension(service.translation_map_solve())
        n, dim_a = p.total_dim, p.hopf.dim
        eye = Mat.identity(n)
        for c in range(n):
            left = t.project @ kron(p.left_matrix({c: ONE}), eye) @ t.section
            for d in range(n):
                product = p.multiply({c: ONE}, {d: ONE})
                for a in range(dim_a):
                    source = {b * dim_a + a: v for b, v in product.items()}
                    assert tau.apply_sparse(source) == left.apply_sparse(tau.apply_sparse({d * dim_a + a: ONE}))

    def test_unit_tensor_recovers_the_table(self, z2_free_4):
        """Test that τ(1⊗h_a) is the stored value τ(h_a)."""
        p = z2_free_4.bundle
        service = BundleService(p)
        table = service.translation_map_solve()
        tau = service.tau_extension(table)
        dim_a = p.hopf.dim
        for a in range(dim_a):
            source = {b * dim_a + a: v for b, v in p.unit_vector().items()}
            assert tau.apply_sparse(source) == table.values[a]
