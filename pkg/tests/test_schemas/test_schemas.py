"""Tests for file-format and report schemas."""

import pytest
from pydantic import ValidationError

from hopfgalois.schemas.file_format import BundleBlock, HopfBlock, InputFile
from hopfgalois.schemas.reports import (
    AxiomViolation,
    CommandReport,
    GaloisReport,
    HopfReport,
    InverseReport,
)


class TestInputFile:
    """Tests for InputFile validation."""

    def test_discriminated_objects(self, z2_document):
        """Test that kind selects the block schema."""
        document = InputFile.model_validate(z2_document)
        assert isinstance(document.objects[0], HopfBlock)
        assert document.field.conductor == 1

    def test_bundle_block(self):
        """Test a minimal bundle block."""
        document = InputFile.model_validate(
            {
                "format_version": "1",
                "objects": [
                    {"kind": "bundle", "name": "b", "hopf": "h", "dim": 1, "mult": [], "unit": [], "coaction": []}
                ],
            }
        )
        assert isinstance(document.objects[0], BundleBlock)

    def test_unknown_kind(self, z2_document):
        """Test that an unknown kind is rejected."""
        z2_document["objects"][0]["kind"] = "algebra"
        with pytest.raises(ValidationError):
            InputFile.model_validate(z2_document)

    def test_extra_keys_forbidden(self, z2_document):
        """Test that unknown top-level keys are rejected."""
        z2_document["comment"] = "hello"
        with pytest.raises(ValidationError):
            InputFile.model_validate(z2_document)

    def test_conductor_positive(self, z2_document):
        """Test that the conductor is at least 1."""
        z2_document["field"]["conductor"] = 0
        with pytest.raises(ValidationError):
            InputFile.model_validate(z2_document)

    def test_triple_arity(self, z2_document):
        """Test that mult entries need three indices and a scalar."""
        z2_document["objects"][0]["mult"][0] = [0, 0, "1"]
        with pytest.raises(ValidationError):
            InputFile.model_validate(z2_document)

    def test_duplicate_names(self, z2_document):
        """Test that object names are unique."""
        z2_document["objects"].append(dict(z2_document["objects"][0]))
        with pytest.raises(ValidationError, match="duplicate object name"):
            InputFile.model_validate(z2_document)


class TestReports:
    """Tests for report serialization."""

    def test_command_report_keeps_subclass_fields(self):
        """Test that results serialize with their own fields."""
        report = CommandReport(
            command="galois",
            ok=True,
            exit_code=0,
            results=[
                GaloisReport(
                    name="p",
                    bijective=True,
                    base_dim=1,
                    tensor_dim=4,
                    target_dim=4,
                    rank=4,
                    kernel_dim=0,
                    cokernel_dim=0,
                )
            ],
        )
        data = report.model_dump(mode="json")
        assert data["results"][0]["kind"] == "galois"
        assert data["results"][0]["rank"] == 4

    def test_hopf_report_violations(self):
        """Test that violations serialize with witness and detail."""
        report = HopfReport(
            name="h",
            dim=2,
            ok=False,
            s_squared_is_id=True,
            commutative=True,
            cocommutative=True,
            violations=[AxiomViolation(axiom="associativity", witness=[1, 1, 0, 0])],
        )
        assert report.model_dump()["violations"][0] == {
            "axiom": "associativity",
            "witness": [1, 1, 0, 0],
            "detail": None,
        }

    @pytest.mark.parametrize(
        "lemma, holds",
        [("passed", True), ("skipped", True), ("failed", False)],
    )
    def test_inverse_report_holds(self, lemma, holds):
        """Test that a failed lemma fails the verdict."""
        report = InverseReport(name="p", method="pw", x_tau_is_id=True, tau_x_is_id=True, lemma=lemma)
        assert report.holds is holds
