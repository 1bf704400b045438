"""
Command line surface of RuleRunner.

Exit codes: 0 for SUCCESS or a passing check, 1 for FAILURE or a failing
check, 2 for any error.
"""
import argparse
import logging
import os
import sys
import typing

from rulerunner.bench import DEFAULT_PROPERTIES, load_properties, run_bench, summarize
from rulerunner.common.color import color_from_environment
from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.events import CellEvent, VerdictEvent
from rulerunner.common.exceptions import RuleRunnerError
from rulerunner.common.listener import MonitorListener
from rulerunner.common.lookup_table import LookupTable
from rulerunner.configuration import Configuration
from rulerunner.engine import Verdict, monitor_stream, monitor_trace
from rulerunner.formatters import (BenchCsvFormatter, EvolutionFormatter, JudgementTableFormatter,
                                   RuleSystemFormatter)
from rulerunner.formula import compile_formula
from rulerunner.mapsem import chain_system, check_rewriting_chain
from rulerunner.oracle.oracle import DEFAULT_BUDGET
from rulerunner.rulegen import grouped_rule_count_of, initialise, rule_count_of
from rulerunner.suite import run_check
from rulerunner.traceio import parse_trace, serialize_trace, stream_cells

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_ERROR = 2

DEFAULT_CELLS = [1000, 10000, 100000]


class Settings:
    """
    Resolves a setting from, in order of precedence, the command line,
    the configuration file, the environment and the built-in default.
    """

    def __init__(self, args: argparse.Namespace, config: Configuration,
                 environ: typing.Mapping[str, str] = None):
        self.__args = args
        self.__config = config
        self.__environ = os.environ if environ is None else environ

    def __flag(self, name: str):
        return getattr(self.__args, name, None)

    def mode(self) -> EvaluationMode:
        flag = self.__flag("mode")
        if flag is not None:
            return EvaluationMode.parse(flag)
        return self.__config.read_mode("mode", EvaluationMode.FIXPOINT)

    def color(self) -> bool:
        if self.__flag("no_color"):
            return False
        if self.__config.contains("color"):
            return self.__config.read_boolean("color", True)
        from_env = color_from_environment(self.__environ)
        return True if from_env is None else from_env

    def integer(self, name: str, default: int) -> int:
        flag = self.__flag(name)
        if flag is not None:
            return flag
        return self.__config.read_integer(name, default)

    def real(self, name: str, default: float) -> float:
        flag = self.__flag(name)
        if flag is not None:
            return flag
        return self.__config.read_float(name, default)

    def boolean(self, name: str, default: bool) -> bool:
        if self.__flag(name):
            return True
        return self.__config.read_boolean(name, default)

    def cells(self) -> typing.List[int]:
        flag = self.__flag("cells")
        if flag is not None:
            return flag
        return self.__config.read_integer_list("cells", DEFAULT_CELLS)


def _cell_counts(value: str) -> typing.List[int]:
    counts = LookupTable.to_integer_list(value)
    if not counts or any(n < 1 for n in counts):
        raise argparse.ArgumentTypeError("expected positive counts such as 1e3,1e4,1e5")
    return counts


def _alphabet(value: str) -> typing.List[str]:
    letters = [a.strip() for a in value.split(",") if a.strip()]
    if not letters:
        raise argparse.ArgumentTypeError("the alphabet is empty")
    return letters


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rulerunner",
                                     description="Rule based runtime verification of finite-trace temporal logic.")
    parser.add_argument("--config", metavar="FILE", help="read defaults from a key = value file")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("compile", help="print the rule system of a formula")
    p.add_argument("formula")
    p.add_argument("--stats", action="store_true",
                   help="also print the number of Horn clauses, and of rules with reactivation heads grouped")

    p = commands.add_parser("monitor", help="monitor a trace")
    p.add_argument("formula")
    p.add_argument("trace", nargs="?",
                   help="a trace file or the trace text; an existing file of that name takes "
                        "precedence over reading the argument as text")
    p.add_argument("--stream", action="store_true",
                   help="read one cell per line from standard input (or from TRACE)")
    p.add_argument("--explain", action="store_true", help="print the state evolution of every cell")
    p.add_argument("--mode", choices=[m.value for m in EvaluationMode])
    p.add_argument("--no-color", dest="no_color", action="store_true")

    p = commands.add_parser("check", help="compare monitors with the reference semantics")
    p.add_argument("--max-nodes", dest="max_nodes", type=int, default=3)
    p.add_argument("--max-len", dest="max_len", type=int, default=3)
    p.add_argument("--alphabet", type=_alphabet, default=["a", "b"])
    p.add_argument("--horizon", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--map", dest="with_map", action="store_true",
                   help="also check that every state maps to a valid rewriting")
    p.add_argument("--formula", help="with --map: print the judgement table of this formula")
    p.add_argument("--trace", help="with --formula: the trace text")
    p.add_argument("--no-color", dest="no_color", action="store_true")

    p = commands.add_parser("bench", help="time monitors over random traces and print CSV")
    p.add_argument("--formulas", metavar="FILE", help="name = formula lines; defaults to phi1, phi2, phi3")
    p.add_argument("--cells", type=_cell_counts)
    p.add_argument("--seed", type=int)
    p.add_argument("--reps", type=int)
    p.add_argument("--density", type=float)
    p.add_argument("--mode", choices=[m.value for m in EvaluationMode])
    p.add_argument("--summary", action="store_true", help="append a linear fit of time against cells")
    return parser


class _ExplainListener(MonitorListener):
    def __init__(self, formatter: EvolutionFormatter, stream: typing.TextIO):
        self.__formatter = formatter
        self.__stream = stream

    def on_cell(self, event: CellEvent):
        self.__formatter.format(event, self.__stream)

    def on_verdict(self, event: VerdictEvent):
        pass


def _read_trace_argument(value: str) -> str:
    if os.path.isfile(value):
        with open(value, "r", encoding="utf-8") as file:
            return file.read()
    return value


def _cmd_compile(args, settings: Settings, out: typing.TextIO) -> int:
    system = initialise(compile_formula(args.formula))
    RuleSystemFormatter().format(system, out)
    if args.stats:
        out.write("# RULES %d\n# GROUPED %d\n" % (rule_count_of(system), grouped_rule_count_of(system)))
    return EXIT_SUCCESS


def _cmd_monitor(args, settings: Settings, out: typing.TextIO, stdin: typing.TextIO) -> int:
    system = initialise(compile_formula(args.formula))
    mode = settings.mode()
    listeners = []
    if args.explain:
        listeners.append(_ExplainListener(EvolutionFormatter(system, settings.color()), out))

    if args.stream:
        if args.trace:
            with open(args.trace, "r", encoding="utf-8") as file:
                verdict = _last(monitor_stream(system, stream_cells(file), mode, listeners))
        else:
            verdict = _last(monitor_stream(system, stream_cells(stdin), mode, listeners))
    else:
        if args.trace is None:
            raise RuleRunnerError("a trace is needed unless --stream is given")
        trace = parse_trace(_read_trace_argument(args.trace))
        if args.explain:
            out.write("EVOLUTION OVER [%s]\n\n" % serialize_trace(trace))
        verdict = monitor_trace(system, trace, mode, listeners)

    out.write("%s\n" % verdict)
    return EXIT_SUCCESS if verdict.succeeded else EXIT_FAILURE


def _last(results) -> Verdict:
    verdict = None
    for verdict in results:
        pass
    return verdict


def _cmd_check(args, settings: Settings, out: typing.TextIO) -> int:
    if args.formula is not None:
        if args.trace is None:
            raise RuleRunnerError("--formula needs --trace")
        f = compile_formula(args.formula)
        rows = check_rewriting_chain(f, parse_trace(args.trace))
        system = chain_system(f)
        JudgementTableFormatter(system, settings.color()).format(rows, out)
        return EXIT_SUCCESS if all(r.valid for r in rows) else EXIT_FAILURE

    report = run_check(max_nodes=args.max_nodes, max_len=args.max_len, alphabet=args.alphabet,
                       horizon=settings.integer("horizon", 3),
                       budget=settings.integer("budget", DEFAULT_BUDGET),
                       with_map=settings.boolean("with_map", False))
    for mismatch in report.mismatches:
        out.write("%s\n" % mismatch)
    out.write("%s\n" % report.summary())
    return EXIT_SUCCESS if report.passed else EXIT_FAILURE


def _cmd_bench(args, settings: Settings, out: typing.TextIO) -> int:
    properties = load_properties(args.formulas) if args.formulas else list(DEFAULT_PROPERTIES)
    records = run_bench(properties, settings.cells(), seed=settings.integer("seed", 0),
                        reps=settings.integer("reps", 1), density=settings.real("density", 0.5),
                        mode=settings.mode())
    BenchCsvFormatter().format(records, out)
    if args.summary:
        for name, fit in summarize(records).items():
            out.write("# %s: total_ms = %.6f * n_cells + %.3f (R^2 = %.4f)\n"
                      % (name, fit.slope, fit.intercept, fit.r_squared))
    return EXIT_SUCCESS


def main(argv: typing.Sequence[str] = None, out: typing.TextIO = None, err: typing.TextIO = None,
         stdin: typing.TextIO = None) -> int:
    """Runs the command line and returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_SUCCESS if e.code == 0 else EXIT_ERROR

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=err,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = Configuration()
        if args.config:
            config.load_from_file(args.config)
        settings = Settings(args, config)
        if args.command == "compile":
            return _cmd_compile(args, settings, out)
        if args.command == "monitor":
            return _cmd_monitor(args, settings, out, stdin)
        if args.command == "check":
            return _cmd_check(args, settings, out)
        return _cmd_bench(args, settings, out)
    except (RuleRunnerError, OSError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        err.write("rulerunner: error: %s\n" % e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
