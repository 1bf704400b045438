import argparse
import io

import pytest

from rulerunner.cli import EXIT_ERROR, EXIT_FAILURE, EXIT_SUCCESS, Settings, main
from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.configuration import Configuration


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


class TestCompile:

    def test_dump(self):
        code, out, _ = run("compile", "F a")
        assert code == EXIT_SUCCESS
        lines = out.splitlines()
        assert lines[0] == "# EVALUATION"
        assert "R[F a] & [a]T -> [F a]T" in lines
        assert "[F a]? -> R[a], R[F a]" in lines
        assert lines[lines.index("# INITIAL") + 1:] == ["R[a]", "R[F a]"]

    def test_stats(self):
        _, out, _ = run("compile", "--stats", "F a")
        assert out.splitlines()[-2:] == ["# RULES 30", "# GROUPED 29"]

    def test_syntax_error(self):
        code, out, err = run("compile", "a &")
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith("rulerunner: error:")


class TestMonitorCommand:

    def test_verdicts(self):
        assert run("monitor", "a | F b", "c - a - b,d - b") == (EXIT_SUCCESS, "SUCCESS@3\n", "")
        code, out, _ = run("monitor", "F a", "b - b")
        assert (code, out) == (EXIT_FAILURE, "FAILURE@2\n")

    @pytest.mark.parametrize("mode", ["fixpoint", "singlepass"])
    def test_modes(self, mode):
        assert run("monitor", "--mode", mode, "a | X b", "b - b")[1] == "SUCCESS@2\n"

    def test_trace_file(self, tmp_path):
        path = tmp_path / "trace.txt"
        path.write_text("c - a - b,d - b\n", encoding="utf-8")
        assert run("monitor", "a | F b", str(path))[1] == "SUCCESS@3\n"

    def test_explain(self):
        code, out, _ = run("monitor", "--explain", "--no-color", "a | F b", "c - a - b,d - b")
        assert code == EXIT_SUCCESS
        lines = out.splitlines()
        assert lines[:6] == [
            "EVOLUTION OVER [c - a - b,d - b,END]",
            "",
            "state | R[a], R[b], R[F b], R[(a | F b)]B",
            "+ obs | R[a], R[b], R[F b], R[(a | F b)]B, c",
            " eval | [a]F, [b]F, [F b]?, [(a | F b)]?R",
            "react | R[b], R[F b], R[(a | F b)]R",
        ]
        assert lines[6:] == [
            "",
            "state | R[b], R[F b], R[(a | F b)]R",
            "+ obs | R[b], R[F b], R[(a | F b)]R, a",
            " eval | [b]F, [F b]?, [(a | F b)]?R",
            "react | R[b], R[F b], R[(a | F b)]R",
            "",
            "state | R[b], R[F b], R[(a | F b)]R",
            "+ obs | R[b], R[F b], R[(a | F b)]R, b, d",
            " eval | [b]T, [F b]T, [(a | F b)]T, SUCCESS",
            " STOP | PROPERTY SATISFIED",
            "",
            "SUCCESS@3",
        ]
        assert "\033[" not in out

    def test_stream(self):
        assert run("monitor", "--stream", "F a", stdin="b\na\n")[:2] == (EXIT_SUCCESS, "SUCCESS@2\n")
        assert run("monitor", "--stream", "F a", stdin="b\nb,END\n")[:2] == (EXIT_FAILURE, "FAILURE@2\n")

    def test_stream_without_end(self):
        code, _, err = run("monitor", "--stream", "F a", stdin="b\nb\n")
        assert code == EXIT_ERROR
        assert "END" in err

    def test_missing_trace(self):
        assert run("monitor", "F a")[0] == EXIT_ERROR

    def test_bad_trace(self):
        assert run("monitor", "F a", "b - - a")[0] == EXIT_ERROR

    def test_existing_file_takes_precedence_over_text(self, tmp_path, monkeypatch):
        (tmp_path / "a").write_text("b,END\n", encoding="utf-8")
        monkeypatch.chdir(tmp_path)
        assert run("monitor", "a", "a")[:2] == (EXIT_FAILURE, "FAILURE@1\n")

    def test_trace_help_names_the_file_precedence(self, capsys):
        assert run("monitor", "--help")[0] == EXIT_SUCCESS
        text = " ".join(capsys.readouterr().out.split())
        assert "an existing file of that name takes precedence over reading the argument as text" in text

    def test_nested_temporal_operands(self):
        text = "F ((a & X b) | (c & W d))"
        assert run("monitor", text, "a - a - b,END")[:2] == (EXIT_SUCCESS, "SUCCESS@3\n")
        assert run("monitor", text, "a - c - x")[:2] == (EXIT_FAILURE, "FAILURE@3\n")


class TestCheckCommand:

    def test_passes(self):
        code, out, _ = run("check", "--max-nodes", "1", "--max-len", "2", "--horizon", "1")
        assert code == EXIT_SUCCESS
        assert out.rstrip().endswith("0 mismatches")

    def test_judgement_table(self):
        code, out, _ = run("check", "--map", "--no-color", "--formula", "a | X b", "--trace", "b - b")
        assert code == EXIT_SUCCESS
        lines = out.splitlines()
        assert lines[0].startswith("State")
        assert len(lines) == 12
        assert all(line.endswith("ok") for line in lines[1:])

    @pytest.mark.parametrize("formula", ["F a", "a | F b", "F X a"])
    def test_judgement_table_with_eventually(self, formula):
        code, out, _ = run("check", "--map", "--no-color", "--formula", formula, "--trace", "b - a")
        assert code == EXIT_SUCCESS
        lines = out.splitlines()
        assert lines[0].startswith("State")
        assert len(lines) > 1
        assert all(line.endswith("ok") for line in lines[1:])

    def test_budget(self):
        assert run("check", "--budget", "5")[0] == EXIT_ERROR


class TestBenchCommand:

    def test_csv_and_summary(self):
        code, out, _ = run("bench", "--cells", "1e1,2e1", "--seed", "4", "--summary")
        assert code == EXIT_SUCCESS
        lines = out.splitlines()
        assert lines[0] == "formula,n_cells,rep,compile_ms,total_ms,avg_ms_per_cell,seed"
        assert len([line for line in lines if line.startswith("phi")]) == 6
        assert sum(1 for line in lines if line.startswith("# phi")) == 3

    def test_configuration_defaults(self, tmp_path):
        path = tmp_path / "rr.cfg"
        path.write_text("mode = singlepass\ncells = 5\nseed = 3\n", encoding="utf-8")
        _, out, _ = run("--config", str(path), "bench", "--seed", "9")
        rows = out.splitlines()[1:]
        assert len(rows) == 3
        assert all(row.split(",")[1] == "5" and row.endswith(",9") for row in rows)

    def test_invalid_cells(self):
        assert run("bench", "--cells", "0")[0] == EXIT_ERROR

    def test_missing_configuration(self, tmp_path):
        assert run("--config", str(tmp_path / "none.cfg"), "bench")[0] == EXIT_ERROR


class TestSettings:

    def settings(self, config_text="", environ=None, **flags):
        config = Configuration()
        config.load_from_text(config_text)
        return Settings(argparse.Namespace(**flags), config, environ or {})

    def test_color_precedence(self):
        assert self.settings(no_color=False).color()
        assert not self.settings(no_color=False, environ={"RR_COLOR": "off"}).color()
        assert self.settings("color = yes", no_color=False, environ={"RR_COLOR": "0"}).color()
        assert not self.settings("color = yes", no_color=True).color()

    def test_mode_precedence(self):
        assert self.settings(mode=None).mode() is EvaluationMode.FIXPOINT
        assert self.settings("mode = single-pass", mode=None).mode() is EvaluationMode.SINGLE_PASS
        assert self.settings("mode = singlepass", mode="fixpoint").mode() is EvaluationMode.FIXPOINT

    def test_numbers(self):
        settings = self.settings("reps = 3\ndensity = 0.25\ncells = 1e2, 1e3", reps=None, density=None,
                                 cells=None, seed=None)
        assert settings.integer("reps", 1) == 3
        assert settings.integer("seed", 0) == 0
        assert settings.real("density", 0.5) == 0.25
        assert settings.cells() == [100, 1000]

    def test_help(self):
        assert run("--help")[0] == EXIT_SUCCESS
        assert run("frobnicate")[0] == EXIT_ERROR
