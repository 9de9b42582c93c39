# app/tests/test_main.py
"""
Tests for the command-line interface.
"""
import json

import pytest
import typer
from typer.testing import CliRunner

from app.main import app, parse_args
from app.models.models import AlgebraTag, EdgeSelection, OutputFormat

runner = CliRunner()


class TestParseArgs:
    """Tests for parse_args()."""

    def test_defaults(self, clean_env):
        """No flags gives the symbolic so*(12) JSON run."""
        config = parse_args([])
        assert config.algebra is AlgebraTag.SO_STAR
        assert config.rank == 6
        assert config.symbolic
        assert config.edges is EdgeSelection.REDUCED
        assert config.output_format is OutputFormat.JSON

    def test_numeric_labels(self, clean_env):
        """Comma-separated labels become a tuple."""
        config = parse_args(["--rank", "4", "--labels", "1,2,3,4", "--format", "dot"])
        assert config.labels == (1, 2, 3, 4)
        assert config.output_format is OutputFormat.DOT

    def test_env_defaults(self, clean_env):
        """MULTIPLET_* variables supply defaults under the flags."""
        clean_env.setenv("MULTIPLET_RANK", "4")
        clean_env.setenv("MULTIPLET_OUTPUT_FORMAT", "table")
        config = parse_args([])
        assert config.rank == 4
        assert config.output_format is OutputFormat.TABLE

    @pytest.mark.parametrize(
        "argv",
        [
            ["--rank", "5"],
            ["--rank", "0"],
            ["--labels", "1,1,1"],
            ["--labels", "1,0,1,1,1,1"],
            ["--format", "svg"],
            ["--edges", "some"],
            ["--algebra", "so-split", "--rank", "4"],
            ["--rank", "six"],
            ["--bogus"],
        ],
    )
    def test_usage_errors(self, clean_env, argv):
        """Invalid runs exit with status 2."""
        result = runner.invoke(app, argv)
        assert result.exit_code == 2

    @pytest.mark.parametrize("argv", [["--rank", "0"], ["--rank", "5"], ["--labels", "1,0,1,1,1,1"]])
    def test_bad_values_are_bad_parameters(self, clean_env, argv):
        """Values that fail validation raise BadParameter, falsy ones included."""
        with pytest.raises(typer.BadParameter):
            parse_args(argv)

    def test_zero_rank_not_replaced_by_default(self, clean_env):
        """An explicit rank 0 is validated, not swapped for the settings rank."""
        result = runner.invoke(app, ["--rank", "0", "--format", "table"])
        assert result.exit_code == 2
        assert "chi_g''^+" not in result.stdout

    def test_split_override(self, clean_env):
        """The override flag allows so-split at other ranks."""
        config = parse_args(["--algebra", "so-split", "--rank", "4", "--allow-split-any-rank"])
        assert config.algebra is AlgebraTag.SO_SPLIT


class TestCli:
    """End-to-end CLI tests."""

    def test_symbolic_table(self, clean_env):
        """--format table prints the 32 named rows."""
        result = runner.invoke(app, ["--algebra", "so-star", "--rank", "6", "--labels", "symbolic", "--format", "table"])
        assert result.exit_code == 0
        assert "chi_g''^+" in result.stdout
        assert "chi_0^-" in result.stdout

    def test_unit_labels_json(self, clean_env):
        """chi_0^- has d = 0 at unit labels."""
        result = runner.invoke(app, ["--rank", "6", "--labels", "1,1,1,1,1,1", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        chi0 = next(v for v in payload["vertices"] if v["name"] == "chi_0^-")
        assert chi0["d"]["text"] == "0"

    def test_deterministic_output(self, clean_env):
        """Two identical runs print identical bytes."""
        first = runner.invoke(app, ["--format", "dot"])
        second = runner.invoke(app, ["--format", "dot"])
        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout

    def test_output_file(self, clean_env, tmp_path):
        """--output writes the artifact to disk."""
        target = tmp_path / "out" / "so8.json"
        result = runner.invoke(app, ["--rank", "4", "--output", str(target)])
        assert result.exit_code == 0
        assert json.loads(target.read_text(encoding="utf-8"))["rank"] == 4

    def test_usage_error_exit_code(self, clean_env):
        """Odd rank exits with status 2."""
        result = runner.invoke(app, ["--rank", "7"])
        assert result.exit_code == 2

    def test_verify_passes(self, clean_env):
        """--verify at rank 4 exits 0."""
        clean_env.setenv("MULTIPLET_VERIFY_SAMPLES", "2")
        result = runner.invoke(app, ["--rank", "4", "--verify"])
        assert result.exit_code == 0
        assert "ALL CHECKS PASSED" in result.stdout

    def test_verify_tampered_table(self, clean_env, tampered_table):
        """A tampered golden table makes --verify exit 1."""
        clean_env.setenv("MULTIPLET_GOLDEN_TABLE_PATH", str(tampered_table))
        clean_env.setenv("MULTIPLET_VERIFY_SAMPLES", "1")
        result = runner.invoke(app, ["--rank", "6", "--verify"])
        assert result.exit_code == 1
        assert "missing chi_b^-" in result.stdout

    def test_verify_with_skipped_oracle(self, clean_env):
        """Skipped oracle checks make --verify exit 1 without claiming success."""
        clean_env.setenv("MULTIPLET_ORACLE_MAX_RANK", "4")
        clean_env.setenv("MULTIPLET_VERIFY_SAMPLES", "1")
        result = runner.invoke(app, ["--rank", "6", "--verify"])
        assert result.exit_code == 1
        assert "[SKIP] brute-force Weyl group" in result.stdout
        assert "ALL CHECKS PASSED" not in result.stdout
