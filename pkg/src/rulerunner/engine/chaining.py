"""
The per-cell steps of a monitor: ingest the observations of a cell,
close the state under the evaluation rules, then replace it with the
activations the reactivation rules schedule for the next cell.
"""
import logging
import typing

from rulerunner.common.exceptions import ConflictingVerdictError, MonitorPhaseError, NoVerdictError
from rulerunner.engine import obligation
from rulerunner.engine.monitor_state import MonitorState
from rulerunner.engine.phase import Phase
from rulerunner.engine.verdict import Outcome
from rulerunner.rulegen import Qualifier, Rule, RuleSystem, StateAtom, sort_key
from rulerunner.rulegen import state_atom

logger = logging.getLogger(__name__)

Evaluator = typing.Callable[[RuleSystem, MonitorState], MonitorState]


def fc_step(rules: typing.Iterable[Rule], atoms: typing.AbstractSet[StateAtom]) -> typing.Set[StateAtom]:
    """
    Applies every rule once to atoms and returns the heads of the rules
    whose whole body is contained in atoms. atoms is not modified.
    """
    return {rule.head for rule in rules if rule.body <= atoms}


def initial_state(system: RuleSystem) -> MonitorState:
    """Returns the state a monitor starts from at the first cell."""
    return MonitorState(system.initial_state)


def ingest_cell(system: RuleSystem, state: MonitorState, cell: typing.AbstractSet[str],
                is_last: bool, evaluate: Evaluator = None) -> MonitorState:
    """
    Adds the observations of a cell to the state.

    Besides one observation atom per name of the cell, the end marker
    (END or !END) is added, as well as an absence atom for every active
    observation leaf whose name is missing from the cell.

    Every active obligation node is moved through the cell, running its
    operand instances with evaluate (fixpoint by default), and its value
    is added as an OBLIGATION atom.

    :raises MonitorPhaseError: the state is not waiting for a cell.
    """
    if state.phase is not Phase.AWAITING_CELL or state.ingested:
        raise MonitorPhaseError("cannot ingest a cell in phase %s" % state.phase)
    active = state.atoms
    atoms = set(active)
    atoms.update(state_atom.obs(name) for name in cell)
    atoms.add(state_atom.END_MARKER if is_last else state_atom.NOT_END)
    for leaf in system.leaves:
        if leaf.name not in cell and leaf.activation in active:
            atoms.add(leaf.absent)
    obligations = ()
    if system.obligations:
        obligations = _advance_obligations(system, state, cell, bool(is_last), evaluate or evaluate_fixpoint, atoms)
    return MonitorState(frozenset(atoms), state.cell_index, Phase.AWAITING_CELL, bool(is_last),
                        obligations=obligations)


def _advance_obligations(system: RuleSystem, state: MonitorState, cell: typing.AbstractSet[str], is_last: bool,
                         evaluate: Evaluator, atoms: typing.Set[StateAtom]) -> tuple:
    held = dict(state.obligations)

    def run(operand: RuleSystem, instance: MonitorState) -> obligation.StepResult:
        return run_instance(operand, instance, cell, is_last, evaluate)

    advanced = []
    for node, spec in system.obligations:
        current = None
        if state_atom.act(node, Qualifier.P) in state.atoms:
            current = held.get(node)
        elif state_atom.act(node) not in state.atoms:
            continue
        if current is None:
            current = obligation.Obligation(start=state.cell_index - 1)
        moved = obligation.advance(spec, current, is_last, run)
        atoms.add(state_atom.obligation(node, moved.value))
        advanced.append((node, moved))
    return tuple(advanced)


def run_instance(system: RuleSystem, state: MonitorState, cell: typing.AbstractSet[str], is_last: bool,
                 evaluate: Evaluator) -> obligation.StepResult:
    """
    Runs one obligation instance over a cell and returns its verdict, or
    its state for the next cell. That state always carries cell index 1,
    so instances started at different cells compare equal when they
    agree on everything else.
    """
    evaluated = evaluate(system, ingest_cell(system, state, cell, is_last, evaluate))
    if evaluated.phase is Phase.HALTED:
        return Outcome.SUCCESS if state_atom.SUCCESS in evaluated.atoms else Outcome.FAILURE
    reacted = react(system, evaluated)
    return MonitorState(reacted.atoms, obligations=reacted.obligations)


def _require_ingested(state: MonitorState):
    if state.phase is not Phase.AWAITING_CELL or not state.ingested:
        raise MonitorPhaseError("cannot evaluate in phase %s before a cell is ingested" % state.phase)


def _settle(state: MonitorState, atoms: typing.Set[StateAtom], derived: typing.List[StateAtom],
            rounds: int) -> MonitorState:
    success = state_atom.SUCCESS in atoms
    failure = state_atom.FAILURE in atoms
    if success and failure:
        raise ConflictingVerdictError("both SUCCESS and FAILURE derived at cell %d" % state.cell_index)
    if success or failure:
        phase = Phase.HALTED
    elif state.is_last:
        raise NoVerdictError("the trace ended at cell %d without a verdict" % state.cell_index)
    else:
        phase = Phase.EVALUATED
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("Cell %d evaluated in %d rounds: %d atoms derived, phase %s",
                     state.cell_index, rounds, len(derived), phase)
    return MonitorState(frozenset(atoms), state.cell_index, phase, state.is_last, tuple(derived), rounds,
                        state.obligations)


def evaluate_fixpoint(system: RuleSystem, state: MonitorState) -> MonitorState:
    """
    Closes the state under the evaluation rules by applying forward
    chaining over all of them until the state stops growing.

    rounds of the result counts every application, the last one included.

    :raises MonitorPhaseError: no cell has been ingested.
    :raises ConflictingVerdictError: both verdicts were derived.
    :raises NoVerdictError: the last cell ended undecided.
    """
    _require_ingested(state)
    atoms = set(state.atoms)
    derived: typing.List[StateAtom] = []
    rounds = 0
    while True:
        rounds += 1
        fresh = fc_step(system.eval_rules, atoms) - atoms
        if not fresh:
            break
        derived.extend(sorted(fresh, key=sort_key))
        atoms |= fresh
    return _settle(state, atoms, derived, rounds)


def evaluate_single_pass(system: RuleSystem, state: MonitorState) -> MonitorState:
    """
    Closes the state under the evaluation rules in one ordered sweep.

    Rules are visited in the post-order of the subformula they evaluate
    and their heads are added at once, so every operand is decided before
    the rules of its parent are tested.

    :raises MonitorPhaseError: no cell has been ingested.
    :raises ConflictingVerdictError: both verdicts were derived.
    :raises NoVerdictError: the last cell ended undecided.
    """
    _require_ingested(state)
    atoms = set(state.atoms)
    derived: typing.List[StateAtom] = []
    for group in system.sweep:
        if group.activation is not None and group.activation not in atoms:
            continue
        for key, rules in group.keyed:
            if key in atoms:
                _fire(rules, atoms, derived)
        _fire(group.unkeyed, atoms, derived)
    return _settle(state, atoms, derived, 1)


def _fire(rules: typing.Iterable[Rule], atoms: typing.Set[StateAtom], derived: typing.List[StateAtom]):
    for rule in rules:
        if rule.head not in atoms and rule.body <= atoms:
            atoms.add(rule.head)
            derived.append(rule.head)


def react(system: RuleSystem, state: MonitorState) -> MonitorState:
    """
    Replaces the state with the activations the reactivation rules derive
    from it and moves on to the next cell. Truth values, observations and
    markers are all dropped; obligations are kept for the nodes that
    continue.

    :raises MonitorPhaseError: the cell has not been evaluated or a
        verdict was already reached.
    """
    if state.phase is not Phase.EVALUATED:
        raise MonitorPhaseError("cannot react in phase %s" % state.phase)
    atoms = frozenset(fc_step(system.react_rules, state.atoms))
    kept = tuple((node, o) for node, o in state.obligations if state_atom.act(node, Qualifier.P) in atoms)
    return MonitorState(atoms, state.cell_index + 1, obligations=kept)
