"""Tests for the command-line surface."""

import json

import pytest

from hopfgalois.main import main
from hopfgalois.services import format_service
from hopfgalois.services.corpus_service import example_names


@pytest.fixture
def example_file(tmp_path):
    """Emit a corpus example to a file and return its path."""

    def _emit(name: str) -> str:
        path = tmp_path / f"{name}.json"
        assert main(["example", name, "--emit", str(path)]) == 0
        return str(path)

    return _emit


def _lines(text: str) -> dict[str, str]:
    return dict(line.split(" = ", 1) for line in text.splitlines() if " = " in line)


class TestExampleCommand:
    """Tests for the example command."""

    def test_list(self, capsys):
        """Test that --list prints one name per line."""
        assert main(["example", "--list"]) == 0
        assert capsys.readouterr().out.splitlines() == example_names()

    def test_emit_to_stdout(self, capsys):
        """Test that --emit - prints a parseable document."""
        assert main(["example", "z2-regular", "--emit", "-"]) == 0
        parsed = format_service.parse(capsys.readouterr().out)
        assert list(parsed.bundles) == ["Z/2-regular"]

    def test_missing_name(self, capsys):
        """Test that a name or --list is required."""
        assert main(["example"]) == 2
        assert "MalformedInputError" in capsys.readouterr().err

    def test_unknown_example(self, capsys):
        """Test that an unknown example is an input error."""
        assert main(["example", "z9-regular"]) == 2


class TestGaloisCommand:
    """Tests for the galois command."""

    def test_free_bundle(self, example_file, capsys):
        """Test exit 0 and rank 8 on four points."""
        path = example_file("z2-free-4")
        capsys.readouterr()
        assert main(["galois", path]) == 0
        lines = _lines(capsys.readouterr().out)
        assert lines["ok"] == "true"
        assert lines["results.0.surjective"] == "true"
        assert lines["results.1.rank"] == "8"

    def test_non_free_control(self, example_file, capsys):
        """Test exit 1 with a one-dimensional cokernel."""
        path = example_file("z2-nonfree-3")
        capsys.readouterr()
        assert main(["galois", path]) == 1
        lines = _lines(capsys.readouterr().out)
        assert lines["exit_code"] == "1"
        assert lines["results.0.cokernel_dim"] == "1"
        assert lines["results.1.bijective"] == "false"

    def test_unknown_bundle(self, example_file):
        """Test that --bundle must name a bundle of the file."""
        assert main(["galois", example_file("z2-free-4"), "--bundle", "nope"]) == 2

    def test_out_writes_json(self, example_file, tmp_path):
        """Test that --out saves the structured report."""
        out = tmp_path / "report.json"
        assert main(["galois", example_file("z2-free-4"), "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["command"] == "galois"
        assert report["results"][1]["kind"] == "galois"
        assert report["results"][1]["bijective"] is True

    def test_output_is_deterministic(self, example_file, capsys):
        """Test that two runs differ only in timing."""
        path = example_file("z2-nonfree-3")
        capsys.readouterr()
        runs = []
        for _ in range(2):
            main(["galois", path])
            lines = _lines(capsys.readouterr().out)
            lines.pop("timing_ms")
            runs.append(lines)
        assert runs[0] == runs[1]


class TestOtherCommands:
    """Tests for validate, decompose, translate and differential."""

    def test_validate(self, example_file, capsys):
        """Test that a corpus file passes every axiom suite."""
        path = example_file("s3-regular")
        capsys.readouterr()
        assert main(["validate", path]) == 0
        lines = _lines(capsys.readouterr().out)
        assert lines["results.0.kind"] == "hopf"
        assert lines["results.1.kind"] == "bundle"
        assert lines["results.2.kind"] == "corep"

    def test_malformed_file(self, write_file, capsys):
        """Test that a broken file exits 2 with the error on stderr."""
        path = write_file("broken.json", '{"format_version": "1", "objects": [')
        assert main(["validate", path]) == 2
        captured = capsys.readouterr()
        assert "exit_code = 2" in captured.out
        assert "ParseError" in captured.err

    def test_decompose_with_builtin_irreps(self, example_file, capsys):
        """Test builtin:Z/2 on four points."""
        path = example_file("z2-free-4")
        capsys.readouterr()
        assert main(["decompose", path, "--irreps", "builtin:Z/2"]) == 0
        assert _lines(capsys.readouterr().out)["results.0.total"] == "4"

    def test_decompose_with_foreign_builtin(self, example_file):
        """Test that builtin irreps of another group are refused."""
        assert main(["decompose", example_file("z2-free-4"), "--irreps", "builtin:S3"]) == 1

    def test_translate_and_verify(self, example_file, capsys):
        """Test translate --method pw --verify on the regular S3 bundle."""
        path = example_file("s3-regular")
        capsys.readouterr()
        assert main(["translate", path, "--method", "pw", "--verify"]) == 0
        lines = _lines(capsys.readouterr().out)
        assert lines["results.0.method"] == "pw"
        assert lines["results.1.kind"] == "inverse"
        assert lines["results.1.x_tau_is_id"] == "true"
        assert lines["results.1.tau_x_is_id"] == "true"

    def test_translate_solve_on_non_free_control(self, example_file):
        """Test that solving τ on the non-free control exits 1."""
        assert main(["translate", example_file("z2-nonfree-3"), "--method", "solve"]) == 1

    def test_differential(self, example_file, capsys):
        """Test the differential command on four points."""
        path = example_file("z2-free-4")
        capsys.readouterr()
        assert main(["differential", path]) == 0
        lines = _lines(capsys.readouterr().out)
        assert lines["results.0.omega1_dim"] == "12"
        assert lines["results.2.holds"] == "true"
        assert lines["results.3.consistent"] == "true"

    def test_differential_on_non_free_control(self, example_file, capsys):
        """Test that equal subspaces are reported next to the failed verdict."""
        path = example_file("z2-nonfree-3")
        capsys.readouterr()
        assert main(["differential", path]) == 1
        lines = _lines(capsys.readouterr().out)
        assert lines["results.2.kind"] == "bm_md"
        assert lines["results.2.subspaces_equal"] == "true"
        assert lines["results.2.vertical_surjective"] == "false"
        assert lines["results.2.gap_dim"] == "0"
        assert lines["results.2.vertical_deficit"] == "1"
        assert lines["results.2.holds"] == "false"
