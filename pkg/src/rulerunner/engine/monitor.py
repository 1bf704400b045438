import logging
import typing

from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.events import CellEvent, VerdictEvent
from rulerunner.common.exceptions import (MonitorPhaseError, RuleRunnerError, StreamError,
                                          UnterminatedTraceError)
from rulerunner.common.listener import MonitorListener
from rulerunner.engine.chaining import evaluate_fixpoint, evaluate_single_pass, ingest_cell, initial_state, react
from rulerunner.engine.monitor_state import MonitorState
from rulerunner.engine.phase import Phase
from rulerunner.engine.verdict import MonitorResult, Outcome, Pending, Verdict
from rulerunner.oracle import Trace
from rulerunner.rulegen import RuleSystem
from rulerunner.rulegen import state_atom

logger = logging.getLogger(__name__)

CellSource = typing.Iterable[typing.Tuple[typing.AbstractSet[str], bool]]


class Monitor:
    """
    Runs a rule system over a trace fed one cell at a time.

    The monitor keeps nothing but its current state: every cell is
    evaluated, checked for a verdict and then flushed, so memory does not
    grow with the number of cells.

    Without listeners, the next state of every undecided cell is
    remembered by the current state and the observations the formula
    refers to, and a repeated transition is taken from there. At most
    TRANSITION_CACHE_SIZE transitions are kept.

    .. note::
        A Monitor is owned by one caller. Several monitors may share the
        same RuleSystem across threads.
    """

    TRANSITION_CACHE_SIZE = 4096

    def __init__(self, system: RuleSystem, mode: EvaluationMode = EvaluationMode.FIXPOINT):
        if not isinstance(system, RuleSystem):
            raise TypeError("system must be a RuleSystem")
        if not isinstance(mode, EvaluationMode):
            raise TypeError("mode must be an EvaluationMode")
        self.__system = system
        self.__mode = mode
        self.__evaluate = evaluate_single_pass if mode is EvaluationMode.SINGLE_PASS else evaluate_fixpoint
        self.__state = initial_state(system)
        self.__verdict: typing.Optional[Verdict] = None
        self.__listeners: typing.List[MonitorListener] = []
        self.__transitions: typing.Dict[tuple, MonitorState] = {}

    @property
    def system(self) -> RuleSystem:
        return self.__system

    @property
    def mode(self) -> EvaluationMode:
        return self.__mode

    @property
    def state(self) -> MonitorState:
        """The current state; after a verdict, the state the verdict was derived in."""
        return self.__state

    @property
    def verdict(self) -> typing.Optional[Verdict]:
        return self.__verdict

    @property
    def cells_consumed(self) -> int:
        if self.__verdict is not None:
            return self.__verdict.cells_consumed
        return self.__state.cell_index - 1

    def add_listener(self, listener: MonitorListener) -> None:
        if isinstance(listener, MonitorListener) and listener not in self.__listeners:
            self.__listeners.append(listener)

    def remove_listener(self, listener: MonitorListener) -> None:
        if listener in self.__listeners:
            self.__listeners.remove(listener)

    def clear_listeners(self) -> None:
        self.__listeners.clear()

    def feed(self, cell: typing.AbstractSet[str], is_last: bool = False) -> MonitorResult:
        """
        Processes one cell and returns the verdict, or Pending if the
        formula is still undecided after it.

        :param cell: The observations of the cell.
        :param is_last: Whether this cell ends the trace.
        :raises MonitorPhaseError: the monitor already reached a verdict.
        :raises NoVerdictError: the last cell left the formula undecided.
        :raises ConflictingVerdictError: both verdicts were derived.
        """
        if self.__verdict is not None:
            raise MonitorPhaseError("the monitor halted at cell %d" % self.__verdict.at_cell)
        system = self.__system
        before = self.__state
        key = None
        if not self.__listeners:
            key = (before.atoms, before.obligations, system.observation_names.intersection(cell), bool(is_last))
            known = self.__transitions.get(key)
            if known is not None:
                self.__state = MonitorState(known.atoms, before.cell_index + 1, obligations=known.obligations)
                return Pending(before.cell_index)

        ingested = ingest_cell(system, before, frozenset(cell), is_last, self.__evaluate)
        evaluated = self.__evaluate(system, ingested)

        if evaluated.phase is Phase.HALTED:
            self.__state = evaluated
            outcome = Outcome.SUCCESS if state_atom.SUCCESS in evaluated.atoms else Outcome.FAILURE
            self.__verdict = Verdict(outcome, evaluated.cell_index, evaluated.cell_index)
            self.__fire_cell(before, ingested, evaluated, frozenset())
            logger.debug("Verdict %s", self.__verdict)
            event = VerdictEvent(self, self.__verdict)
            for listener in self.__listeners:
                listener.on_verdict(event)
            return self.__verdict

        self.__state = react(system, evaluated)
        if key is not None:
            if len(self.__transitions) >= self.TRANSITION_CACHE_SIZE:
                self.__transitions.clear()
            self.__transitions[key] = self.__state
        self.__fire_cell(before, ingested, evaluated, self.__state.atoms)
        return Pending(evaluated.cell_index)

    def __fire_cell(self, before: MonitorState, ingested: MonitorState, evaluated: MonitorState,
                    reactivated: typing.FrozenSet):
        if not self.__listeners:
            return
        event = CellEvent(self, before.cell_index, before.atoms, ingested.atoms,
                          evaluated.derived, reactivated, evaluated.rounds, ingested.obligation_starts())
        for listener in self.__listeners:
            listener.on_cell(event)


def monitor_trace(system: RuleSystem, trace: Trace, mode: EvaluationMode = EvaluationMode.FIXPOINT,
                  listeners: typing.Iterable[MonitorListener] = ()) -> Verdict:
    """
    Monitors a complete trace and returns the verdict. Cells after the
    one that produced the verdict are never read.

    :raises ValueError: the trace is empty.
    """
    if len(trace) == 0:
        raise ValueError("cannot monitor an empty trace")
    monitor = Monitor(system, mode)
    for listener in listeners:
        monitor.add_listener(listener)
    last = len(trace) - 1
    for i, cell in enumerate(trace.cells):
        result = monitor.feed(cell, i == last)
        if isinstance(result, Verdict):
            return result
    # feed() raises NoVerdictError on an undecided last cell
    raise AssertionError("unreachable")


def monitor_stream(system: RuleSystem, cell_source: CellSource,
                   mode: EvaluationMode = EvaluationMode.FIXPOINT,
                   listeners: typing.Iterable[MonitorListener] = ()) -> typing.Iterator[MonitorResult]:
    """
    Monitors cells pulled from cell_source, a provider of (cell, is_last)
    pairs, yielding Pending after every undecided cell and finally the
    Verdict.

    Errors raised by the provider that are not RuleRunnerErrors are
    wrapped into a StreamError naming the cell that was being read.

    :raises StreamError: the provider failed.
    :raises UnterminatedTraceError: the provider stopped before a last cell.
    """
    monitor = Monitor(system, mode)
    for listener in listeners:
        monitor.add_listener(listener)
    iterator = iter(cell_source)
    cell_index = 1
    while True:
        try:
            cell, is_last = next(iterator)
        except StopIteration:
            raise UnterminatedTraceError("the cell stream ended after %d cells without END" % (cell_index - 1))
        except RuleRunnerError:
            raise
        except Exception as e:
            raise StreamError("reading cell %d failed: %s" % (cell_index, e), cell_index, e) from e
        result = monitor.feed(cell, is_last)
        yield result
        if isinstance(result, Verdict):
            return
        cell_index += 1
