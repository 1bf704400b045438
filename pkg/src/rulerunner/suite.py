"""
Exhaustive checks of compiled monitors against the reference semantics.

Every formula up to a number of nodes is compiled and monitored over
every trace up to a length; the verdict must match the oracle, both
evaluation modes must derive the same atoms, early verdicts must be
irrevocable and, on request, every intermediate state must map to a
valid rewriting.
"""
import itertools
import logging
import random
import typing

from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.events import CellEvent, VerdictEvent
from rulerunner.common.exceptions import BudgetExceededError, RuleRunnerError
from rulerunner.common.listener import MonitorListener
from rulerunner.engine import Outcome, monitor_trace
from rulerunner.formula import Formula, FormulaKind, post_order, print_formula
from rulerunner.mapsem import BOTTOM, TOP, check_rewriting_chain
from rulerunner.oracle import Irrevocability, Trace, oracle_eval, oracle_irrevocable, subsets
from rulerunner.oracle.oracle import DEFAULT_BUDGET
from rulerunner.rulegen import RuleSystem, initialise
from rulerunner.traceio import serialize_trace

logger = logging.getLogger(__name__)

Compiler = typing.Callable[[Formula], RuleSystem]

_UNARY = (FormulaKind.NEXT, FormulaKind.WEAK_NEXT, FormulaKind.EVENTUALLY, FormulaKind.ALWAYS)
_BINARY = (FormulaKind.OR, FormulaKind.AND, FormulaKind.UNTIL)


def _leaves(atoms: typing.Sequence[str]) -> typing.List[Formula]:
    leaves = [Formula.true(), Formula.end()]
    for a in atoms:
        leaves += [Formula.atom(a), Formula.neg_atom(a)]
    return leaves


def enumerate_formulas(max_nodes: int, atoms: typing.Iterable[str]) -> typing.Iterator[Formula]:
    """
    Yields every formula in negation normal form with 1 to max_nodes
    nodes over the given observation names, smallest first.
    """
    atoms = sorted(set(atoms))
    by_size: typing.Dict[int, typing.List[Formula]] = {}
    for n in range(1, max_nodes + 1):
        if n == 1:
            level = _leaves(atoms)
        else:
            level = [Formula.unary(k, c) for k in _UNARY for c in by_size[n - 1]]
            for left_size in range(1, n - 1):
                pairs = list(itertools.product(by_size[left_size], by_size[n - 1 - left_size]))
                level += [Formula.binary(k, l, r) for k in _BINARY for l, r in pairs]
        by_size[n] = level
        yield from level


def enumerate_traces(max_len: int, alphabet: typing.Iterable[str]) -> typing.Iterator[Trace]:
    """Yields every trace of 1 to max_len cells whose cells are subsets of alphabet."""
    cells = subsets(alphabet)
    for n in range(1, max_len + 1):
        for combination in itertools.product(cells, repeat=n):
            yield Trace(combination)


def random_formula(n_nodes: int, atoms: typing.Sequence[str], rng: random.Random) -> Formula:
    """Returns a random formula in negation normal form with exactly n_nodes nodes."""
    if n_nodes < 1:
        raise ValueError("a formula has at least one node")
    if n_nodes == 1:
        return rng.choice(_leaves(atoms))
    if n_nodes == 2 or rng.random() < 0.4:
        return Formula.unary(rng.choice(_UNARY), random_formula(n_nodes - 1, atoms, rng))
    left = rng.randint(1, n_nodes - 2)
    return Formula.binary(rng.choice(_BINARY), random_formula(left, atoms, rng),
                          random_formula(n_nodes - 1 - left, atoms, rng))


class Mismatch(typing.NamedTuple):
    """One failed check; kind is oracle, mode, irrevocable, map or error."""
    kind: str
    formula: str
    trace: str
    detail: str

    def __str__(self) -> str:
        return "%s: %s over [%s]: %s" % (self.kind, self.formula, self.trace, self.detail)


class CheckReport:
    """The outcome of run_check()."""

    def __init__(self):
        self.formulas = 0
        self.runs = 0
        self.early_verdicts = 0
        self.chains = 0
        self.mismatches: typing.List[Mismatch] = []

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return ("%d formulas, %d runs, %d early verdicts, %d rewriting chains, %d mismatches"
                % (self.formulas, self.runs, self.early_verdicts, self.chains, len(self.mismatches)))


class _CellRecorder(MonitorListener):
    def __init__(self):
        self.cells: typing.List[typing.FrozenSet] = []

    def on_cell(self, event: CellEvent):
        self.cells.append(frozenset(event.derived))

    def on_verdict(self, event: VerdictEvent):
        pass


def run_check(max_nodes: int = 3, max_len: int = 3, alphabet: typing.Sequence[str] = ("a", "b"),
              horizon: int = 3, budget: int = DEFAULT_BUDGET, with_map: bool = False,
              compiler: Compiler = initialise) -> CheckReport:
    """
    Runs the exhaustive checks and returns their report.

    compiler turns a formula into a rule system and defaults to
    initialise(). Rewriting chains are not checked for formulas with an
    always node, which has no judgement.

    :raises BudgetExceededError: more than budget monitor runs would be
        needed, or one irrevocability check alone exceeds it.
    """
    alphabet = sorted(set(alphabet))
    formulas = list(enumerate_formulas(max_nodes, alphabet)) if max_nodes > 0 else []
    traces = list(enumerate_traces(max_len, alphabet)) if max_len > 0 else []
    total = len(formulas) * len(traces)
    if total > budget:
        raise BudgetExceededError("%d monitor runs exceed the budget of %d" % (total, budget), budget)
    logger.debug("Checking %d formulas over %d traces", len(formulas), len(traces))

    report = CheckReport()
    for f in formulas:
        report.formulas += 1
        root = post_order(f).root
        text = print_formula(root)
        try:
            system = compiler(root)
        except RuleRunnerError as e:
            report.mismatches.append(Mismatch("error", text, "", e.message))
            continue
        irrevocable_cache: typing.Dict[typing.Tuple, Irrevocability] = {}
        for trace in traces:
            report.runs += 1
            _check_one(root, text, system, trace, alphabet, horizon, budget, with_map, report, irrevocable_cache)
    return report


def _check_one(f: Formula, text: str, system: RuleSystem, trace: Trace, alphabet: typing.Sequence[str],
               horizon: int, budget: int, with_map: bool, report: CheckReport, cache: dict):
    trace_text = serialize_trace(trace)
    fixpoint, single = _CellRecorder(), _CellRecorder()
    try:
        verdict = monitor_trace(system, trace, EvaluationMode.FIXPOINT, (fixpoint,))
        swept = monitor_trace(system, trace, EvaluationMode.SINGLE_PASS, (single,))
    except RuleRunnerError as e:
        report.mismatches.append(Mismatch("error", text, trace_text, e.message))
        return

    expected = oracle_eval(f, trace, 0)
    if verdict.succeeded != expected:
        report.mismatches.append(Mismatch("oracle", text, trace_text,
                                          "monitor says %s, oracle says %s" % (verdict, expected)))
    if swept != verdict or single.cells != fixpoint.cells:
        report.mismatches.append(Mismatch("mode", text, trace_text,
                                          "fixpoint %s, single pass %s" % (verdict, swept)))

    if verdict.at_cell < len(trace):
        report.early_verdicts += 1
        key = trace.cells[:verdict.at_cell]
        fixed = cache.get(key)
        if fixed is None:
            fixed = oracle_irrevocable(f, trace, verdict.at_cell, alphabet, horizon, budget, min(1, horizon))
            cache[key] = fixed
        wanted = Irrevocability.ALWAYS_TRUE if verdict.outcome is Outcome.SUCCESS else Irrevocability.ALWAYS_FALSE
        if fixed is not wanted:
            report.mismatches.append(Mismatch("irrevocable", text, trace_text,
                                              "%s issued but the prefix %s" % (verdict, fixed)))

    if with_map and not any(n.kind is FormulaKind.ALWAYS for n in f.walk()):
        report.chains += 1
        rows = check_rewriting_chain(f, trace)
        bad = [i for i, row in enumerate(rows, 1) if not row.valid]
        final = TOP if verdict.succeeded else BOTTOM
        if bad or rows[-1].judgement != final:
            report.mismatches.append(Mismatch("map", text, trace_text,
                                              "invalid rows %s, final judgement %s" % (bad, rows[-1].judgement)))
