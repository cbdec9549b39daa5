"""
Unit tests for the command line interface
"""
import pytest

from app.core.config import Settings
from app.main import cli, run
from app.schemas.report import Report

from tests.fixtures.samples import (
    EXAMPLE_BRAID,
    EXAMPLE_CHI_IMAGES,
    PURE_DIAGRAM,
    PURE_DIAGRAM_WORD,
    TRIANGLE,
)


def structured(cli_runner, *args, **kwargs) -> Report:
    """Invoke a command with structured output and parse its report"""
    result = cli_runner.invoke(cli, [*args, "--format", "structured"], **kwargs)
    return Report.model_validate_json(result.stdout)


class TestWordCommands:
    """Test cases for reduce, walk and invariants"""

    def test_reduce(self, cli_runner):
        result = cli_runner.invoke(cli, ["reduce", "--n", "3", "a(1,2) a(2,3) a(2,3) a(1,2) a(1,3)"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "a(1,3)"

    def test_reduce_report(self, cli_runner):
        report = structured(cli_runner, "reduce", "--n", "2", "a(1,2) a(1,2)")
        assert report.command == "reduce"
        assert report.context.model_dump() == {"n": 2, "kind": "plain"}
        assert report.parameters == {"n": 2, "kind": "plain", "word": "a(1,2) a(1,2)"}
        assert report.outputs == {"word": "", "length": 0}
        assert report.timing_ms is None and report.error is None

    def test_walk_is_seeded(self, cli_runner):
        args = ["walk", "--n", "3", "--steps", "6", "--seed", "3", TRIANGLE[0]]
        first = cli_runner.invoke(cli, args)
        second = cli_runner.invoke(cli, args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_invariants(self, cli_runner):
        result = cli_runner.invoke(cli, ["invariants", "--n", "2", "a(1,2)"])
        assert result.exit_code == 0
        assert "odd generators: a(1,2)" in result.stdout

    def test_invariants_report(self, cli_runner):
        report = structured(cli_runner, "invariants", "--n", "2", "--kind", "dotted", "t(1) a(1,2) t(1)")
        fingerprint = report.outputs["fingerprint"]
        assert fingerprint["h_membership"] == 1
        assert fingerprint["pair_profiles"] == {"1,2": "a(1,2;1)"}


class TestEquivalenceCommands:
    """Test cases for equiv, trivial and normalize"""

    def test_equiv(self, cli_runner):
        result = cli_runner.invoke(cli, ["equiv", "--n", "3", *TRIANGLE])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "equivalent (1 steps)"
        assert lines[1].startswith("  @0 [plain-3 forward]")

    def test_equiv_report(self, cli_runner):
        report = structured(cli_runner, "equiv", "--n", "3", *TRIANGLE)
        assert report.verdicts == {"equivalence": "equivalent"}
        assert report.inputs == {"u": TRIANGLE[0], "v": TRIANGLE[1]}
        assert report.outputs["result"]["witness"][0]["tag"] == "plain-3"

    def test_trivial_distinct(self, cli_runner):
        result = cli_runner.invoke(cli, ["trivial", "--n", "3", EXAMPLE_BRAID])
        assert result.exit_code == 0
        assert result.stdout.strip() == "distinct (separated by deletion-profile)"

    def test_unknown_is_not_an_error(self, cli_runner):
        """Exhausted bounds report unknown and still exit 0"""
        u = "a(1,2;1) a(1,3;0) a(2,3;0)"
        v = "a(2,3;0) a(1,3;0) a(1,2;1)"
        result = cli_runner.invoke(cli, ["equiv", "--n", "3", "--kind", "parity", "--max-len", "3", u, v])
        assert result.exit_code == 0
        assert result.stdout.strip() == "unknown (no path within length 3)"

    def test_normalize(self, cli_runner):
        result = cli_runner.invoke(cli, ["normalize", "--n", "2", "--witness", "t(2) a(1,2) t(2)"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "t(1) a(1,2) t(1)"
        assert lines[1].startswith("witness: ")

    def test_normalize_report(self, cli_runner):
        report = structured(cli_runner, "normalize", "--n", "2", "t(2) a(1,2) t(2)")
        assert report.context.kind == "dotted"
        assert report.outputs == {"blocks": [[1, 2, 1]], "word": "t(1) a(1,2) t(1)"}


class TestMapCommands:
    """Test cases for map and homcheck"""

    def test_map_chain(self, cli_runner):
        report = structured(cli_runner, "map", "--n", "3", "--chain", "psi:1,chi", EXAMPLE_BRAID)
        assert report.context.kind == "plain"
        assert [step["map"] for step in report.outputs["chain"]] == ["psi:1", "chi"]
        assert report.outputs["word"] == EXAMPLE_CHI_IMAGES[1]

    def test_map_text(self, cli_runner):
        result = cli_runner.invoke(cli, ["map", "--n", "2", "--chain", "i", "a(1,2)"])
        assert result.exit_code == 0
        assert result.stdout.startswith("i: a(1,2;0)")

    def test_map_chain_through_the_quotient(self, cli_runner):
        report = structured(cli_runner, "map", "--n", "2", "--chain", "omega,psi", "t(1) a(1,2)")
        assert report.error is None
        assert report.outputs["word"] == "t(1) a(1,2)"

    def test_unknown_map(self, cli_runner):
        result = cli_runner.invoke(cli, ["map", "--n", "2", "--chain", "sigma", "a(1,2)"])
        assert result.exit_code == 1
        assert "UnknownMap" in result.stderr

    def test_homcheck(self, cli_runner):
        result = cli_runner.invoke(cli, ["homcheck", "--n", "2", "--map", "omega"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "omega: 6/6 relations confirmed"

    def test_homcheck_report(self, cli_runner):
        report = structured(cli_runner, "homcheck", "--n", "3", "--map", "i")
        assert report.verdicts == {"homomorphism": "equivalent"}
        assert report.context.model_dump() == {"n": 3, "kind": "plain"}
        assert len(report.outputs["relations"]) == 6


class TestInvariantCommands:
    """Test cases for profile and brunnian"""

    def test_profile(self, cli_runner):
        report = structured(cli_runner, "profile", "--n", "3", EXAMPLE_BRAID)
        assert report.verdicts == {"m=1": "nontrivial", "m=2": "nontrivial", "m=3": "nontrivial"}
        assert report.outputs["certificate"]["m"] == 1
        assert report.outputs["certificate"]["chain"] == ["psi:1", "chi"]

    def test_profile_outside_h(self, cli_runner):
        result = cli_runner.invoke(cli, ["profile", "--n", "3", "a(1,2)"])
        assert result.exit_code == 0
        assert "m=1: psi image not in H" in result.stdout
        assert "nontrivial: certified by deleting strand 3" in result.stdout

    def test_brunnian(self, cli_runner):
        result = cli_runner.invoke(cli, ["brunnian", "--n", "3", EXAMPLE_BRAID])
        assert result.exit_code == 0
        assert "brunnian: candidate" in result.stdout
        assert "certificate: m=1" in result.stdout

    def test_brunnian_report(self, cli_runner):
        report = structured(cli_runner, "brunnian", "--n", "3", "a(1,2)")
        assert report.verdicts == {"brunnian": "not-brunnian", "nontrivial": "nontrivial"}
        assert report.outputs["brunnian"]["candidate"] is False


class TestDiagramCommands:
    """Test cases for diagram-to-word and render-diagram"""

    def test_diagram_to_word(self, cli_runner):
        result = cli_runner.invoke(cli, ["diagram-to-word"], input=PURE_DIAGRAM)
        assert result.exit_code == 0
        assert result.stdout.strip() == PURE_DIAGRAM_WORD

    def test_diagram_report(self, cli_runner):
        report = structured(cli_runner, "diagram-to-word", "--coloring", "2,1,3", "--moves", input=PURE_DIAGRAM)
        assert "source" in report.parameters
        assert report.outputs["permutation"] == [1, 2, 3]
        assert report.outputs["pure"] is True
        assert report.outputs["word"] == "a(1,2) a(2,3) a(2,3) a(1,2)"
        assert "square-delete@1" in report.outputs["moves"]

    @pytest.mark.parametrize(
        "args, text, error",
        [
            ([], "braid n=3\n1", "NotPure"),
            (["--coloring", "2,x,3"], PURE_DIAGRAM, "InvalidColoring"),
            ([], "braid n=3\n4", "EventOutOfRange"),
        ],
    )
    def test_diagram_errors(self, cli_runner, args, text, error):
        result = cli_runner.invoke(cli, ["diagram-to-word", *args], input=text)
        assert result.exit_code == 1
        assert error in result.stderr

    def test_render(self, cli_runner):
        result = cli_runner.invoke(cli, ["render-diagram", "--n", "3", "1", "2", "2", "1"])
        assert result.exit_code == 0
        assert result.stdout == PURE_DIAGRAM + "\n"


class TestReports:
    """Test cases for error handling and report options"""

    def test_domain_error_text(self, cli_runner):
        result = cli_runner.invoke(cli, ["reduce", "--n", "2", "a(1,3)"])
        assert result.exit_code == 1
        assert result.stdout == ""
        assert "error (IndexOutOfRange)" in result.stderr

    def test_domain_error_report(self, cli_runner):
        result = cli_runner.invoke(cli, ["reduce", "--n", "2", "a(1,3)", "--format", "structured"])
        assert result.exit_code == 1
        report = Report.model_validate_json(result.stdout)
        assert report.error.type == "IndexOutOfRange"
        assert report.error.details == {"position": 0, "index": 3, "n": 2}

    @pytest.mark.parametrize(
        "args",
        [
            ["reduce", "a(1,2)"],
            ["reduce", "--n", "2", "--kind", "braided", "a(1,2)"],
            ["equiv", "--n", "0", "", ""],
            ["nosuchcommand"],
        ],
    )
    def test_usage_errors(self, cli_runner, args):
        assert cli_runner.invoke(cli, args).exit_code == 2

    def test_timing(self, cli_runner):
        report = structured(cli_runner, "reduce", "--n", "2", "a(1,2)", "--timing")
        assert report.timing_ms is not None and report.timing_ms >= 0
        assert "timing" not in report.parameters

    def test_reports_are_deterministic(self, cli_runner):
        """Without --timing the same invocation gives byte-identical reports"""
        args = ["trivial", "--n", "3", EXAMPLE_BRAID, "--format", "structured"]
        assert cli_runner.invoke(cli, args).stdout == cli_runner.invoke(cli, args).stdout

    def test_logs_stay_off_stdout(self, cli_runner):
        result = cli_runner.invoke(cli, ["--log-level", "DEBUG", "equiv", "--n", "3", *TRIANGLE, "--format", "structured"])
        assert result.exit_code == 0
        assert Report.model_validate_json(result.stdout).verdicts["equivalence"] == "equivalent"

    def test_version(self, cli_runner):
        result = cli_runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert Settings().version in result.stdout


class TestRun:
    """Test cases for the exit codes returned by run()"""

    def test_success(self, capsys):
        assert run(["reduce", "--n", "2", "a(1,2) a(1,2)"]) == 0

    def test_domain_error(self, capsys):
        assert run(["reduce", "--n", "2", "a(1,3)"]) == 1

    def test_usage_error(self, capsys):
        assert run(["reduce", "a(1,2)"]) == 2
