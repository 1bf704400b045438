"""
Obligations: eventually, always and until nodes whose operands hold
temporal operators.

Every start of such an operand runs as an instance of the operand's own
rule system. What the node still needs is a positive boolean expression
over the pending instances, in which CONTINUE stands for the node itself
from the next cell on. Instances in the same state are the same
instance, so the expression stays finite however long the trace.

Expressions are tuples: TRUE, FALSE, CONTINUE, ``("I", side, state)``
for an instance of operand side, and ``("|", items)`` or
``("&", items)`` with a frozenset of items.
"""
import typing
from dataclasses import dataclass, field

from rulerunner.engine.monitor_state import MonitorState
from rulerunner.engine.verdict import Outcome
from rulerunner.formula import FormulaKind
from rulerunner.rulegen import ObligationSpec, RuleSystem, TruthValue

Expr = tuple

TRUE: Expr = ("T",)
FALSE: Expr = ("F",)
CONTINUE: Expr = ("C",)

INSTANCE = "I"
EITHER = "|"
BOTH = "&"

StepResult = typing.Union[Outcome, MonitorState]
Runner = typing.Callable[[RuleSystem, MonitorState], StepResult]


@dataclass(frozen=True)
class Obligation:
    """
    The pending part of one obligation node.

    start is the 0-based position the node was activated at. It is not
    compared, so obligations that only differ in their start are equal.
    """
    expr: Expr = CONTINUE
    start: int = field(default=0, compare=False)

    @property
    def value(self) -> TruthValue:
        if self.expr == TRUE:
            return TruthValue.T
        if self.expr == FALSE:
            return TruthValue.F
        return TruthValue.U

    def instances(self) -> typing.Iterator[MonitorState]:
        """Yields the state of every pending operand instance."""
        pending = [self.expr]
        while pending:
            e = pending.pop()
            if e[0] == INSTANCE:
                yield e[2]
            elif e[0] in (EITHER, BOTH):
                pending.extend(e[1])


def combine(op: str, items: typing.Iterable[Expr]) -> Expr:
    """
    Joins items with | or &, flattening nested joins of the same kind
    and folding the constants away.
    """
    zero, unit = (TRUE, FALSE) if op == EITHER else (FALSE, TRUE)
    flat = set()
    for item in items:
        if item == zero:
            return zero
        if item == unit:
            continue
        if item[0] == op:
            flat.update(item[1])
        else:
            flat.add(item)
    if not flat:
        return unit
    if len(flat) == 1:
        return flat.pop()
    return op, frozenset(flat)


def _unfold(spec: ObligationSpec, is_last: bool) -> Expr:
    """The one-step unfolding of the node, started at the current cell."""
    fresh = [(INSTANCE, side, MonitorState(system.initial_state)) for side, system in enumerate(spec.operands)]
    if not is_last:
        later = CONTINUE
    else:
        later = TRUE if spec.kind is FormulaKind.ALWAYS else FALSE
    if spec.kind is FormulaKind.EVENTUALLY:
        return combine(EITHER, (fresh[0], later))
    if spec.kind is FormulaKind.ALWAYS:
        return combine(BOTH, (fresh[0], later))
    return combine(EITHER, (fresh[1], combine(BOTH, (fresh[0], later))))


def _replace_continue(expr: Expr, unfolding: Expr) -> Expr:
    if expr == CONTINUE:
        return unfolding
    if expr[0] in (EITHER, BOTH):
        return combine(expr[0], [_replace_continue(e, unfolding) for e in expr[1]])
    return expr


def advance(spec: ObligationSpec, obligation: Obligation, is_last: bool, run: Runner) -> Obligation:
    """
    Moves an obligation through the current cell.

    The node is unfolded once more, every pending instance is run over
    the cell with run, which returns the verdict of the instance or its
    state for the next cell, and decided instances are replaced by their
    value. On the last cell every instance decides, so the result is
    TRUE or FALSE.
    """
    expr = _replace_continue(obligation.expr, _unfold(spec, is_last))
    results: typing.Dict[typing.Tuple[int, MonitorState], StepResult] = {}

    def visit(e: Expr) -> Expr:
        if e[0] == INSTANCE:
            key = (e[1], e[2])
            result = results.get(key)
            if result is None:
                result = run(spec.operands[e[1]], e[2])
                results[key] = result
            if result is Outcome.SUCCESS:
                return TRUE
            if result is Outcome.FAILURE:
                return FALSE
            return INSTANCE, e[1], result
        if e[0] in (EITHER, BOTH):
            return combine(e[0], [visit(c) for c in e[1]])
        return e

    return Obligation(visit(expr), obligation.start)
