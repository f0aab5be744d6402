"""Tests for the Hopf axiom suite and corepresentation operations."""

import random
from dataclasses import replace

import pytest

from hopfgalois.core.exceptions import PreconditionError
from hopfgalois.linalg import Mat, Scalar
from hopfgalois.models import Comodule, Corep, HopfAlgebra
from hopfgalois.services.corpus_service import (
    corpus_hopf_algebras,
    cyclic_characters,
    cyclic_group,
    fn_algebra,
    group_algebra,
    s3_irreps,
    sweedler,
    symmetric_group_3,
)
from hopfgalois.services.hopf_service import (
    antipode_translation_oracle,
    check_comodule,
    check_corep,
    check_hopf,
    comodule_to_corep,
    contraction_intertwines,
    corep_dual,
    corep_morphisms,
    corep_product,
    corep_report,
    is_split_irreducible,
    trivial_corep,
)

MUTATION_TARGETS = ("mult", "unit", "comult", "counit", "antipode")
MUTATION_DELTAS = (1, -1, 2)
MUTATIONS_PER_ALGEBRA = 100


def _mutated(h: HopfAlgebra, target: str, i: int, j: int, delta: int) -> HopfAlgebra:
    m: Mat = getattr(h, target)
    entries = {(r, c): v for r, c, v in m.entries()}
    entries[(i, j)] = m[i, j] + delta
    return replace(h, **{target: Mat(m.rows, m.cols, entries)})


def _schedule(h: HopfAlgebra, seed: int) -> list[tuple[str, int, int, int]]:
    rng = random.Random(seed)
    schedule = []
    for _ in range(MUTATIONS_PER_ALGEBRA):
        target = rng.choice(MUTATION_TARGETS)
        m: Mat = getattr(h, target)
        schedule.append((target, rng.randrange(m.rows), rng.randrange(m.cols), rng.choice(MUTATION_DELTAS)))
    return schedule


class TestCheckHopf:
    """Tests for check_hopf."""

    @pytest.mark.parametrize("h", corpus_hopf_algebras(), ids=lambda h: h.name)
    def test_corpus_algebras_pass(self, h):
        """Test that every builder output satisfies the axioms."""
        report = check_hopf(h)
        assert report.ok
        assert report.violations == []

    def test_function_algebra_flags(self, fn_z2, fn_s3):
        """Test S² = id and (co)commutativity of function algebras."""
        z2 = check_hopf(fn_z2)
        assert z2.s_squared_is_id
        assert z2.commutative and z2.cocommutative
        s3 = check_hopf(fn_s3)
        assert s3.commutative
        assert not s3.cocommutative

    def test_group_algebra_of_s3(self):
        """Test that kS3 is cocommutative and not commutative."""
        report = check_hopf(group_algebra(symmetric_group_3()))
        assert report.cocommutative
        assert not report.commutative

    def test_sweedler_antipode_has_order_four(self):
        """Test that Sweedler's algebra passes with S² ≠ id."""
        report = check_hopf(sweedler())
        assert report.ok
        assert not report.s_squared_is_id

    def test_perturbed_product_breaks_associativity(self, fn_z2):
        """Test δ1·δ1 = δ0 + δ1 is caught with an associativity witness."""
        report = check_hopf(_mutated(fn_z2, "mult", 0, 3, 1))
        assert not report.ok
        axioms = {v.axiom: v for v in report.violations}
        assert "associativity" in axioms
        # three input indices and one output index
        assert len(axioms["associativity"].witness) == 4

    def test_singular_antipode_reported(self, fn_z2):
        """Test that a zero antipode is reported as singular."""
        report = check_hopf(replace(fn_z2, antipode=Mat.zeros(2, 2)))
        names = [v.axiom for v in report.violations]
        assert "antipode_bijective" in names
        assert "antipode_left" in names

    @pytest.mark.slow
    @pytest.mark.parametrize("seed, h", list(enumerate(corpus_hopf_algebras())), ids=lambda x: getattr(x, "name", str(x)))
    def test_every_mutation_is_rejected(self, seed, h):
        """Test that each scheduled single-entry mutation fails a named axiom."""
        for target, i, j, delta in _schedule(h, seed):
            report = check_hopf(_mutated(h, target, i, j, delta))
            assert not report.ok, f"{h.name}: {target}[{i}, {j}] += {delta} went undetected"
            assert all(v.axiom for v in report.violations)


class TestCoreps:
    """Tests for corepresentation laws and constructions."""

    def test_builtin_irreps_are_coreps(self):
        """Test the laws on the characters of Z/3 and the irreps of S3."""
        for u in cyclic_characters(3) + s3_irreps():
            assert check_corep(u)

    def test_broken_corep_rejected(self, fn_z2):
        """Test that a coefficient with ε(u) ≠ 1 fails."""
        bad = Corep(hopf=fn_z2, name="bad", dim_carrier=1, coeffs=Mat.from_rows([[2], [1]]))
        assert not check_corep(bad)
        report = corep_report(bad)
        assert not report.ok
        assert report.split_irreducible is None
        assert report.contraction_intertwines is None

    def test_character_product(self):
        """Test χ1 × χ2 = trivial over functions on Z/3."""
        trivial, chi1, chi2 = cyclic_characters(3)
        assert corep_product(chi1, chi2) == trivial
        assert corep_product(chi1, chi1) == chi2

    def test_antipode_dual_of_character(self):
        """Test that the dual of χ1 is χ2."""
        _, chi1, chi2 = cyclic_characters(3)
        dual = corep_dual(chi1)
        assert dual == chi2
        assert dual.name == "chi1*"

    def test_morphisms_between_characters(self):
        """Test that distinct characters have no intertwiners."""
        trivial, chi1, chi2 = cyclic_characters(3)
        assert corep_morphisms(chi1, chi2).dim == 0
        assert corep_morphisms(chi1, chi1).dim == 1

    def test_standard_irrep_of_s3(self):
        """Test irreducibility and the contraction check for the standard corep."""
        standard = s3_irreps()[2]
        assert is_split_irreducible(standard)
        assert contraction_intertwines(standard)
        square = corep_product(standard, standard)
        assert square.dim_carrier == 4
        assert corep_morphisms(square, trivial_corep(standard.hopf)).dim == 1
        assert not is_split_irreducible(square)

    def test_corep_report_fields(self):
        """Test the report for a valid irreducible."""
        report = corep_report(s3_irreps()[1])
        assert report.ok
        assert report.split_irreducible
        assert report.contraction_intertwines
        assert report.hopf == "k^S3"

    def test_mixed_algebras_rejected(self):
        """Test that products need a common Hopf algebra."""
        with pytest.raises(PreconditionError):
            corep_product(cyclic_characters(2)[1], cyclic_characters(3)[1])


class TestComodules:
    """Tests for comodule laws and their matrix coefficients."""

    def test_sign_comodule(self, fn_z2):
        """Test that the sign coaction gives the sign character."""
        c = Comodule(hopf=fn_z2, name="sign", dim=1, coaction=Mat.from_rows([[1], [-1]]))
        assert check_comodule(c)
        assert comodule_to_corep(c) == cyclic_characters(2, fn_z2)[1]

    def test_bad_comodule(self, fn_z2):
        """Test that a non-counital coaction is rejected."""
        c = Comodule(hopf=fn_z2, name="bad", dim=1, coaction=Mat.from_rows([[2], [0]]))
        assert not check_comodule(c)


class TestAntipodeOracle:
    """Tests for the S(h⁽¹⁾)⊗h⁽²⁾ table."""

    def test_group_algebra_oracle(self):
        """Test that e_x maps to e_{x⁻¹}⊗e_x in kZ/3."""
        h = group_algebra(cyclic_group(3))
        oracle = antipode_translation_oracle(h)
        assert oracle.shape == (9, 3)
        assert oracle.sparse_columns()[1] == {2 * 3 + 1: Scalar.rational(1)}

    def test_function_algebra_oracle_shape(self):
        """Test the oracle dimensions for functions on S3."""
        assert antipode_translation_oracle(fn_algebra(symmetric_group_3())).shape == (36, 6)
