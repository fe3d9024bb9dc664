"""Unit tests for the command-line surface and its exit codes."""

import json

import pytest

from app.core.config import Settings
from app.main import build_parser, main
from app.models.run import Claim, VerificationReport
from app.schemas.algebra import QuarticSchema
from app.schemas.fiber import PrescribedPointSchema


def write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def prescription_file(tmp_path, prescription):
    points = [PrescribedPointSchema.from_point(p).model_dump() for p in prescription]
    return write(tmp_path / "prescription.json", {"points": points})


@pytest.fixture
def f_file(tmp_path, f):
    return write(tmp_path / "f.json", QuarticSchema.from_form(f).model_dump())


class TestSettings:
    """Test the settings surface."""

    def test_fields(self):
        """Test that only settings the engine reads are declared."""
        assert set(Settings.model_fields) == {
            "DEFAULT_SEED",
            "DEFAULT_TRIALS",
            "RANDOM_COEFF_BOUND",
            "LIFT_ORDER",
            "MODEL_ORDER",
            "MAX_DESIGN_ATTEMPTS",
            "MAX_COVER_DEGREE",
            "DOT_RANKDIR",
            "JSON_INDENT",
            "LOG_LEVEL",
        }

    def test_environment_override(self, monkeypatch):
        """Test that settings are read from the environment."""
        monkeypatch.setenv("LIFT_ORDER", "3")
        assert Settings().LIFT_ORDER == 3


class TestParser:
    """Test argument parsing."""

    def test_commands(self):
        """Test that every command is registered."""
        parser = build_parser()
        for command in ("design-f", "singular-locus", "section", "obstruction", "graft", "verify"):
            args = parser.parse_args([command] if command == "verify" else [command, "in.json"])
            assert args.command == command

    def test_unknown_option_exits_1(self):
        """Test that usage errors map to the input-error code."""
        assert main(["section", "h.json", "--bogus"]) == 1

    def test_missing_command_exits_1(self):
        """Test that a command is required."""
        assert main([]) == 1

    def test_invalid_trials_exits_1(self, f_file):
        """Test that a non-positive trial count is rejected."""
        assert main(["verify", f_file, "--trials", "0"]) == 1


class TestDesignCommand:
    """Test design-f."""

    def test_design(self, prescription_file, capsys):
        """Test that the designed quartic and its 24-point locus are written as JSON."""
        assert main(["design-f", prescription_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["singular_locus"]["count"] == 24
        assert payload["singular_locus"]["complete"]
        assert payload["f"]["terms"]
        assert not payload["symmetric"]

    def test_out_file(self, prescription_file, tmp_path, capsys):
        """Test that --out writes the JSON to a file and nothing to stdout."""
        out = tmp_path / "designed.json"
        assert main(["design-f", prescription_file, "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(out.read_text())["singular_locus"]["count"] == 24

    def test_malformed_json_exits_1(self, tmp_path, capsys):
        """Test that unparseable input is an input error with a JSON message on stderr."""
        path = tmp_path / "bad.json"
        path.write_text("{points: ")
        assert main(["design-f", str(path)]) == 1
        err = capsys.readouterr().err
        assert '"error": "InputError"' in err

    def test_vertex_root_exits_2(self, tmp_path, prescription):
        """Test that a prescribed vertex violates genericity."""
        points = [PrescribedPointSchema.from_point(p).model_dump() for p in prescription]
        points[0]["root"] = ["1", "0"]
        path = write(tmp_path / "vertex.json", {"points": points})
        assert main(["design-f", path]) == 2


class TestSingularLocusCommand:
    """Test singular-locus."""

    def test_designed_output_accepted(self, prescription_file, tmp_path, capsys):
        """Test that the output of design-f is a valid input."""
        designed = tmp_path / "designed.json"
        assert main(["design-f", prescription_file, "--out", str(designed)]) == 0
        capsys.readouterr()
        assert main(["singular-locus", str(designed)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 24


class TestSectionCommand:
    """Test section."""

    def test_plain_section(self, tmp_path, capsys):
        """Test that a plane off the vertices cuts a genus-3 curve."""
        h = write(tmp_path / "h.json", {"coefficients": ["1", "1", "1", "1"]})
        dot = tmp_path / "section.dot"
        assert main(["section", h, "--dot", str(dot)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["genus"] == 3
        assert len(payload["curve"]["components"]) == 4
        assert dot.read_text().startswith("graph ")

    def test_section_with_marks(self, tmp_path, f_file, capsys):
        """Test the base hyperplane through three singular points."""
        h = write(tmp_path / "h.json", {"coefficients": ["-8", "4", "-2", "1"]})
        assert main(["section", h, f_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["genus"] == 0
        assert payload["pre_smoothable"]
        assert payload["dual_dimension"] == 1

    def test_vertex_hyperplane_exits_2(self, tmp_path):
        """Test that a hyperplane through a vertex is a degenerate configuration."""
        h = write(tmp_path / "h.json", {"coefficients": ["0", "1", "1", "1"]})
        assert main(["section", h]) == 2


class TestObstructionCommand:
    """Test obstruction."""

    def test_node(self, tmp_path, capsys):
        """Test that --node reports one node contribution."""
        path = write(tmp_path / "f.json", {"expression": "x^3*w"})
        assert main(["obstruction", path, "--node", "l^k"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["node"] == "l^k"
        assert payload["value"] != "0"

    def test_unknown_node_exits_1(self, tmp_path):
        """Test that asking for a missing node is an input error."""
        path = write(tmp_path / "f.json", {"expression": "x^3*w"})
        assert main(["obstruction", path, "--node", "l^l"]) == 1

    def test_needs_input(self):
        """Test that a quartic or --symbolic is required."""
        assert main(["obstruction"]) == 1


class TestGraftCommand:
    """Test graft."""

    def test_rational(self, tmp_path, f, capsys):
        """Test a degree-8 rational graft from a recipe file."""
        recipe = {
            "f": QuarticSchema.from_form(f).model_dump(),
            "base_points": [["1", "2", "0", "0"], ["0", "1", "2", "0"], ["0", "0", "1", "2"]],
            "auxiliary_points": [["1", "3", "0", "0"], ["0", "0", "1", "-1"]],
            "shared_node": "l^n",
        }
        path = write(tmp_path / "recipe.json", recipe)
        assert main(["graft", path, "--r", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["genus"] == 0
        assert payload["simply_pre_smoothable"]
        assert payload["dual_dimension"] == 1
        assert len(payload["curve"]["components"]) == 8


class TestVerifyCommand:
    """Test verify with a stubbed suite."""

    def report(self, passed: bool) -> VerificationReport:
        return VerificationReport(
            seed=0,
            trials=1,
            claims=(Claim(name="obstruction total", computed="0", expected="0" if passed else "1", passed=passed),),
        )

    def test_passing(self, mocker, capsys):
        """Test that an all-passing report exits 0."""
        run_suite = mocker.patch("app.commands.verify.run_suite", return_value=self.report(True))
        assert main(["verify", "--seed", "5", "--trials", "2"]) == 0
        run_suite.assert_called_once_with(None, seed=5, trials=2, symbolic=False, order=mocker.ANY)
        assert json.loads(capsys.readouterr().out)["passed"]

    def test_failing_claim_exits_3(self, mocker, capsys):
        """Test that a failed claim exits 3 and is still reported."""
        mocker.patch("app.commands.verify.run_suite", return_value=self.report(False))
        assert main(["verify"]) == 3
        payload = json.loads(capsys.readouterr().out)
        assert not payload["passed"]
        assert payload["claims"][0]["name"] == "obstruction total"
