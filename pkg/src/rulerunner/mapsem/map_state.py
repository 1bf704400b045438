import typing
from enum import Enum

from rulerunner.common.exceptions import MapError
from rulerunner.engine import MonitorState
from rulerunner.formula import Formula, FormulaKind, restarts_temporal_operand
from rulerunner.mapsem.judgement import BOTTOM, TOP, FltlJudgement, Join, Judge, Meet
from rulerunner.rulegen import AtomKind, Qualifier, StateAtom, TruthValue
from rulerunner.rulegen import state_atom


class UntilBlockMapping(Enum):
    """
    Selects how an until whose undecided value or activation carries
    the B qualifier is mapped.

    - AS_WRITTEN: the right operand met with the until at the next
      position.
    - UNFOLDING: the left operand met with the until at the next
      position, the part of the one-step unfolding that remains once the
      right operand failed.
    """
    AS_WRITTEN = "as-written"
    UNFOLDING = "unfolding"

    def __str__(self):
        return self.value


class _StateView:
    def __init__(self, atoms: typing.AbstractSet[StateAtom], starts: typing.Mapping[int, int]):
        self.starts = starts
        self.verdict: typing.Optional[FltlJudgement] = None
        if state_atom.SUCCESS in atoms:
            self.verdict = TOP
        elif state_atom.FAILURE in atoms:
            self.verdict = BOTTOM
        self.truths: typing.Dict[int, StateAtom] = {}
        self.acts: typing.Dict[int, StateAtom] = {}
        for atom in atoms:
            if atom.kind is AtomKind.TRUTH:
                self.truths[atom.node] = atom
            elif atom.kind is AtomKind.RULE_ACT:
                self.acts[atom.node] = atom


def map_state(f: Formula, state: typing.Union[MonitorState, typing.AbstractSet[StateAtom]], index: int,
              until_block: UntilBlockMapping = UntilBlockMapping.AS_WRITTEN,
              obligation_starts: typing.Mapping[int, int] = None) -> FltlJudgement:
    """
    Translates the state of a monitor for f into the judgement it stands
    for at 0-based position index.

    A verdict maps to top or bottom, a decided subformula to its truth
    constant. Otherwise the qualifier of the undecided value or of the
    activation selects the operands that are still open. An obligation
    node that is still open maps to the judgement that it holds at the
    position it was started at.

    :param f: The numbered formula the rule system was built from.
    :param state: A MonitorState or a set of state atoms.
    :param index: The position of the current cell.
    :param until_block: Mapping used for an until in B mode.
    :param obligation_starts: The start position of every active
        obligation node; taken from state when it is a MonitorState,
        and index for nodes missing from it.
    :raises MapError: f holds an eventually or always node, or a
        subformula that is neither decided nor active.
    """
    if isinstance(state, MonitorState):
        atoms = state.atoms
        if obligation_starts is None:
            obligation_starts = state.obligation_starts()
    else:
        atoms = state
    view = _StateView(atoms, obligation_starts or {})
    if view.verdict is not None:
        return view.verdict
    return _map(f, view, index, until_block)


def _map(node: Formula, view: _StateView, index: int, until_block: UntilBlockMapping) -> FltlJudgement:
    kind = node.kind
    if kind in (FormulaKind.EVENTUALLY, FormulaKind.ALWAYS):
        raise MapError("no judgement for %s; rewrite eventually into until first" % kind.name.lower())

    known = view.truths.get(node.index)
    if known is not None and known.value is TruthValue.T:
        return TOP
    if known is not None and known.value is TruthValue.F:
        return BOTTOM
    if known is not None:
        aux = known.qualifier
    elif node.index in view.acts:
        aux = view.acts[node.index].qualifier
    else:
        raise MapError("subformula #%d %s is neither decided nor active" % (node.index, node))

    if restarts_temporal_operand(node):
        return Judge(view.starts.get(node.index, index), node)
    if node.kind.is_leaf:
        return Judge(index, node)
    if kind.arity == 2 and aux is Qualifier.L:
        return _map(node.left, view, index, until_block)
    if kind.arity == 2 and aux is Qualifier.R:
        return _map(node.right, view, index, until_block)
    if kind is FormulaKind.OR and aux is Qualifier.B:
        return Join(_map(node.left, view, index, until_block), _map(node.right, view, index, until_block))
    if kind is FormulaKind.AND and aux is Qualifier.B:
        return Meet(_map(node.left, view, index, until_block), _map(node.right, view, index, until_block))
    if kind is FormulaKind.UNTIL:
        again = Judge(index, Formula.unary(FormulaKind.NEXT, node))
        if aux is Qualifier.A:
            return Join(_map(node.right, view, index, until_block),
                        Meet(_map(node.left, view, index, until_block), again))
        if aux is Qualifier.B:
            operand = node.right if until_block is UntilBlockMapping.AS_WRITTEN else node.left
            return Meet(_map(operand, view, index, until_block), again)
    if kind in (FormulaKind.NEXT, FormulaKind.WEAK_NEXT):
        if aux is Qualifier.M:
            return _map(node.child, view, index, until_block)
        return Judge(index, node)
    raise MapError("no judgement for %s with qualifier %r" % (node, aux.value))
