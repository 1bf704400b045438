import logging
import typing

from rulerunner.common.events import CellEvent, VerdictEvent
from rulerunner.common.listener import MonitorListener
from rulerunner.engine import Monitor, Verdict
from rulerunner.formula import Formula, FormulaKind, desugar_eventually, post_order
from rulerunner.mapsem.judgement import FltlJudgement, Judge
from rulerunner.mapsem.map_state import UntilBlockMapping, map_state
from rulerunner.oracle import Trace
from rulerunner.rulegen import AtomKind, RuleSystem, StateAtom, initialise

logger = logging.getLogger(__name__)


class ChainRow(typing.NamedTuple):
    """
    One intermediate state of a monitor run with the judgement it maps
    to. added lists the atoms this row added to the previous one; valid
    tells whether the judgement is a rewriting of the previous row's.
    """
    cell_index: int
    atoms: typing.FrozenSet[StateAtom]
    added: typing.Tuple[StateAtom, ...]
    judgement: FltlJudgement
    valid: bool


class _Row(typing.NamedTuple):
    cell_index: int
    atoms: typing.FrozenSet[StateAtom]
    added: typing.Tuple[StateAtom, ...]
    starts: typing.Dict[int, int]


class _RowCollector(MonitorListener):
    def __init__(self):
        self.states: typing.List[_Row] = []

    def on_cell(self, event: CellEvent):
        starts = event.obligation_starts
        atoms = event.state
        self.states.append(_Row(event.cell_index, atoms, (), starts))
        added = tuple(sorted(event.observed - atoms, key=lambda a: (a.name, a.node)))
        atoms = event.observed
        self.states.append(_Row(event.cell_index, atoms, added, starts))
        for atom in event.derived:
            if atom.kind is AtomKind.REPEAT:
                continue
            atoms = atoms | {atom}
            self.states.append(_Row(event.cell_index, atoms, (atom,), starts))

    def on_verdict(self, event: VerdictEvent):
        pass


def _successors(judge: Judge, trace_length: int) -> typing.Iterator[Judge]:
    f, i = judge.formula, judge.index
    if f.kind in (FormulaKind.OR, FormulaKind.AND):
        yield Judge(i, f.left)
        yield Judge(i, f.right)
    elif f.kind is FormulaKind.UNTIL:
        yield Judge(i, f.left)
        yield Judge(i, f.right)
        yield Judge(i, Formula.unary(FormulaKind.NEXT, f))
    elif f.kind in (FormulaKind.NEXT, FormulaKind.WEAK_NEXT) and i + 1 < trace_length:
        yield Judge(i + 1, f.child)


def _reachable(sources: typing.Iterable[Judge], trace_length: int) -> typing.Set[Judge]:
    seen = set(sources)
    pending = list(seen)
    while pending:
        for nxt in _successors(pending.pop(), trace_length):
            if nxt not in seen:
                seen.add(nxt)
                pending.append(nxt)
    return seen


def is_rewriting_step(before: FltlJudgement, after: FltlJudgement, trace: Trace) -> bool:
    """
    Tests whether after can be obtained from before by rewriting: both
    must have the same value on trace, and every judgement left in after
    must stem from one of before by unfolding an operator, possibly
    moving to the next position.
    """
    if before.value(trace) != after.value(trace):
        return False
    reachable = _reachable(before.simplify().leaves(), len(trace))
    return all(leaf in reachable for leaf in after.simplify().leaves())


def chain_formula(f: Formula) -> Formula:
    """Returns f with every eventually rewritten into until, renumbered."""
    return post_order(desugar_eventually(f)).root


def chain_system(f: Formula) -> RuleSystem:
    """Returns the rule system check_rewriting_chain() monitors f with."""
    return initialise(chain_formula(f))


def check_rewriting_chain(f: Formula, trace: Trace,
                          until_block: UntilBlockMapping = UntilBlockMapping.AS_WRITTEN) -> typing.List[ChainRow]:
    """
    Monitors trace for f and maps every intermediate state to a
    judgement: the state each cell starts with, the state after the
    observations are added and the state after each derived truth value
    or verdict.

    Eventually nodes are first rewritten into until, which renumbers the
    nodes; chain_system() returns the rule system whose node indices the
    rows use. Rows whose judgement is not a rewriting of the previous one
    are flagged, the first row being compared with the judgement that f
    holds at position 0.

    :raises MapError: f contains an always node.
    """
    root = chain_formula(f)
    system = initialise(root)
    collector = _RowCollector()
    monitor = Monitor(system)
    monitor.add_listener(collector)
    last = len(trace) - 1
    for i, cell in enumerate(trace.cells):
        if isinstance(monitor.feed(cell, i == last), Verdict):
            break

    rows = []
    previous: FltlJudgement = Judge(0, root)
    for row in collector.states:
        judgement = map_state(root, row.atoms, row.cell_index - 1, until_block, row.starts)
        valid = is_rewriting_step(previous, judgement, trace)
        if not valid:
            logger.debug("Invalid rewriting at cell %d: %s to %s", row.cell_index, previous, judgement)
        rows.append(ChainRow(row.cell_index, row.atoms, row.added, judgement, valid))
        previous = judgement
    return rows
