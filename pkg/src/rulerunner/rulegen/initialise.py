import logging
import typing

from rulerunner.formula import Formula, FormulaKind, SubformulaTable, post_order, restarts_temporal_operand
from rulerunner.rulegen import state_atom
from rulerunner.rulegen.qualifier import Qualifier, UNDECIDED_QUALIFIERS
from rulerunner.rulegen.rule import Rule, Stage
from rulerunner.rulegen.rule_system import ObligationSpec, RuleSystem
from rulerunner.rulegen.state_atom import StateAtom
from rulerunner.rulegen.tables import TableCell, TableContext, build_tables
from rulerunner.rulegen.truth_value import TruthValue

logger = logging.getLogger(__name__)

_ENTRY_MODE = {
    FormulaKind.OR: Qualifier.B,
    FormulaKind.AND: Qualifier.B,
    FormulaKind.UNTIL: Qualifier.A,
}


def activation_set(node: Formula) -> typing.FrozenSet[StateAtom]:
    """
    Returns the activations that start monitoring node at the current
    cell. X and W only activate themselves; their operand is activated
    one cell later by reactivation. An obligation node starts its own
    operand instances, so it is activated alone as well.
    """
    if restarts_temporal_operand(node):
        return frozenset((state_atom.act(node.index),))
    own = state_atom.act(node.index, _ENTRY_MODE.get(node.kind, Qualifier.NONE))
    if node.kind in (FormulaKind.NEXT, FormulaKind.WEAK_NEXT):
        return frozenset((own,))
    atoms = {own}
    for c in node.children:
        atoms |= activation_set(c)
    return frozenset(atoms)


def _eval_rules(node: Formula, context: TableContext) -> typing.List[Rule]:
    rules = []
    for cell in build_tables(node.kind, context):
        rules.append(Rule(_cell_body(node, cell), state_atom.truth(node.index, *cell.output),
                          Stage.EVALUATION, node.index))
    return rules


def _cell_body(node: Formula, cell: TableCell) -> typing.FrozenSet[StateAtom]:
    body = {state_atom.act(node.index, cell.mode)}
    for child, value in zip(node.children, cell.operands):
        if value is not None:
            body.add(state_atom.truth(child.index, value.truth, value.qualifier))
    if cell.observed is not None:
        body.add(state_atom.obs(node.name) if cell.observed else state_atom.absent(node.name))
    if cell.end is not None:
        body.add(state_atom.END_MARKER if cell.end else state_atom.NOT_END)
    return frozenset(body)


def _reactivations(node: Formula) -> typing.List[typing.Tuple[StateAtom, typing.FrozenSet[StateAtom]]]:
    """Returns (trigger, heads) for every reactivation group of node."""
    i = node.index
    kind = node.kind
    undecided = TruthValue.U
    if kind in (FormulaKind.OR, FormulaKind.AND):
        return [(state_atom.truth(i, undecided, q), frozenset((state_atom.act(i, q),)))
                for q in (Qualifier.B, Qualifier.L, Qualifier.R)]
    if kind is FormulaKind.UNTIL:
        restart = {state_atom.act(i, Qualifier.A)} | activation_set(node.left) | activation_set(node.right)
        groups = [(state_atom.truth(i, undecided, Qualifier.A), frozenset(restart))]
        groups += [(state_atom.truth(i, undecided, q), frozenset((state_atom.act(i, q),)))
                   for q in (Qualifier.B, Qualifier.L, Qualifier.R)]
        return groups
    if kind in (FormulaKind.NEXT, FormulaKind.WEAK_NEXT):
        mirror = state_atom.act(i, Qualifier.M)
        return [(state_atom.truth(i, undecided), frozenset({mirror} | activation_set(node.child))),
                (state_atom.truth(i, undecided, Qualifier.M), frozenset((mirror,)))]
    if kind is FormulaKind.EVENTUALLY:
        return [(state_atom.truth(i, undecided), frozenset({state_atom.act(i)} | activation_set(node.child)))]
    if kind is FormulaKind.ALWAYS:
        heads = frozenset({state_atom.act(i)} | activation_set(node.child))
        return [(state_atom.truth(i, undecided), heads),
                (state_atom.truth(i, undecided, Qualifier.K), heads)]
    return []


def _obligation_rules(node: Formula) -> typing.List[Rule]:
    i = node.index
    return [Rule(frozenset((state_atom.act(i, q), state_atom.obligation(i, v))), state_atom.truth(i, v),
                 Stage.EVALUATION, i)
            for q in (Qualifier.NONE, Qualifier.P) for v in (TruthValue.T, TruthValue.F, TruthValue.U)]


def _verdict_rules(root: Formula) -> typing.List[Rule]:
    i = root.index
    rules = [
        Rule(frozenset((state_atom.truth(i, TruthValue.T),)), state_atom.SUCCESS, Stage.EVALUATION, i),
        Rule(frozenset((state_atom.truth(i, TruthValue.F),)), state_atom.FAILURE, Stage.EVALUATION, i),
    ]
    rules += [Rule(frozenset((state_atom.truth(i, TruthValue.U, q),)), state_atom.REPEAT, Stage.EVALUATION, i)
              for q in UNDECIDED_QUALIFIERS]
    return rules


def _hidden_nodes(table: SubformulaTable) -> typing.Set[int]:
    hidden: typing.Set[int] = set()
    for node in reversed(list(table)):
        if node.index not in hidden and restarts_temporal_operand(node):
            for c in node.children:
                hidden.update(n.index for n in c.walk())
    return hidden


def initialise(f: Formula, context: TableContext = TableContext()) -> RuleSystem:
    """
    Builds the rule system of a formula in negation normal form.

    Evaluation rules come from the tables of every node, in post-order,
    followed by the verdict rules of the root. Reactivation rules reschedule
    every undecided node for the next cell; the initial state activates
    the whole formula at the first cell.

    An eventually, always or until whose operands hold temporal operators
    becomes an obligation node: its operands are compiled into rule
    systems of their own, and its value in every cell is read from an
    OBLIGATION atom the monitor derives from the pending operand instances.

    :param f: A formula without NOT nodes; it is renumbered in post-order.
    :raises NormalFormError: f contains a NOT node.
    :raises UnknownOperatorError: f contains a node without a table.
    """
    table: SubformulaTable = post_order(f)
    hidden = _hidden_nodes(table)
    eval_rules: typing.List[Rule] = []
    react_rules: typing.List[Rule] = []
    obligations: typing.Dict[int, ObligationSpec] = {}
    for node in table:
        if node.index in hidden:
            continue
        if restarts_temporal_operand(node):
            eval_rules += _obligation_rules(node)
            groups = [(state_atom.truth(node.index, TruthValue.U),
                       frozenset((state_atom.act(node.index, Qualifier.P),)))]
            obligations[node.index] = ObligationSpec(node.kind, tuple(initialise(c, context) for c in node.children))
        else:
            eval_rules += _eval_rules(node, context)
            groups = _reactivations(node)
        for trigger, heads in groups:
            body = frozenset((trigger,))
            react_rules += [Rule(body, h, Stage.REACTIVATION, node.index)
                            for h in sorted(heads, key=state_atom.sort_key)]
    eval_rules += _verdict_rules(table.root)
    system = RuleSystem(eval_rules, react_rules, activation_set(table.root), table, obligations)
    logger.debug("Compiled %s into %d rules over %d nodes, %d obligations",
                 system.describe(table.root.index), rule_count_of(system), len(table), len(obligations))
    return system


def rule_count_of(system: RuleSystem) -> int:
    """
    Counts the Horn clauses of a rule system, a reactivation with several
    heads counting once per head, together with the clauses of the
    operand systems of its obligations.
    """
    own = len(system.eval_rules) + len(system.react_rules)
    return own + sum(rule_count_of(s) for _, spec in system.obligations for s in spec.operands)


def grouped_rule_count_of(system: RuleSystem) -> int:
    """Counts like rule_count_of(), but a reactivation counts once however many heads it has."""
    own = len(system.eval_rules) + len({r.body for r in system.react_rules})
    return own + sum(grouped_rule_count_of(s) for _, spec in system.obligations for s in spec.operands)


def rule_count(f: Formula) -> int:
    """Returns the number of Horn clauses initialise() generates for f."""
    return rule_count_of(initialise(f))
