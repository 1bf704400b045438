import io

from rulerunner.common.color import Color, color_from_environment
from rulerunner.common.listener import MonitorListener
from rulerunner.engine import monitor_trace
from rulerunner.formatters import EvolutionFormatter, JudgementTableFormatter, RuleSystemFormatter
from rulerunner.formula import compile_formula
from rulerunner.mapsem import check_rewriting_chain
from rulerunner.rulegen import initialise
from rulerunner.traceio import parse_trace


class Recorder(MonitorListener):
    def __init__(self):
        self.cells = []

    def on_cell(self, event):
        self.cells.append(event)

    def on_verdict(self, event):
        pass


class TestColor:

    def test_paint(self):
        assert Color.RED.paint("x") == "\033[31mx\033[0m"
        assert Color.RED.paint("x", False) == "x"
        assert Color.RED.paint("") == ""

    def test_environment(self):
        assert color_from_environment({}) is None
        assert color_from_environment({"RR_COLOR": "1"}) is True
        for value in ("0", "false", "NO", "off", ""):
            assert color_from_environment({"RR_COLOR": value}) is False


class TestFormatters:

    def test_rule_system(self):
        formatter = RuleSystemFormatter()
        size = formatter.compile(initialise(compile_formula("a")))
        assert size == len(formatter.text)
        assert formatter.text.splitlines() == [
            "# EVALUATION",
            "R[a] & obs:a -> [a]T",
            "R[a] & !obs:a -> [a]F",
            "[a]T -> SUCCESS",
            "[a]F -> FAILURE",
            "[a]? -> REPEAT",
            "[a]?B -> REPEAT",
            "[a]?L -> REPEAT",
            "[a]?R -> REPEAT",
            "[a]?A -> REPEAT",
            "[a]?M -> REPEAT",
            "[a]?K -> REPEAT",
            "# REACTIVATION",
            "# INITIAL",
            "R[a]",
        ]

    def test_evolution_colors(self):
        system = initialise(compile_formula("F a"))
        recorder = Recorder()
        monitor_trace(system, parse_trace("a"), listeners=(recorder,))
        plain, colored = EvolutionFormatter(system, False), EvolutionFormatter(system, True)
        plain.compile(recorder.cells[0])
        colored.compile(recorder.cells[0])
        assert plain.text.endswith(" STOP | PROPERTY SATISFIED\n\n")
        assert "\033[32m[a]T\033[0m" in colored.text
        assert "\033[36ma\033[0m" in colored.text

    def test_rule_system_with_an_obligation(self):
        formatter = RuleSystemFormatter()
        formatter.compile(initialise(compile_formula("F X a")))
        lines = formatter.text.splitlines()
        start = lines.index("# OBLIGATION F X a OPERAND X a")
        assert lines[start + 1] == "# EVALUATION"
        assert lines[lines.index("# INITIAL") + 1] == "R[F X a]"
        assert lines[-1] == "R[X a]"

    def test_evolution_shows_obligations(self):
        system = initialise(compile_formula("F X a"))
        recorder = Recorder()
        monitor_trace(system, parse_trace("b - a"), listeners=(recorder,))
        colored = EvolutionFormatter(system, True)
        colored.compile(recorder.cells[0])
        assert "\033[33mO[F X a]?\033[0m" in colored.text

    def test_judgement_table_flags_invalid_rows(self):
        f = compile_formula("a")
        system = initialise(f)
        rows = check_rewriting_chain(f, parse_trace("a"))
        rows[2] = rows[2]._replace(valid=False)
        out = io.StringIO()
        JudgementTableFormatter(system, False).format(rows, out)
        lines = out.getvalue().splitlines()
        assert lines[0].startswith("State")
        assert lines[1].endswith("[u,0 ⊨ a]F  ok")
        assert lines[3].endswith("⊤  INVALID")
