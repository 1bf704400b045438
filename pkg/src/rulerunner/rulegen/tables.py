"""
Evaluation tables for every operator.

A table cell says: when the operator is active in a given mode and its
operands have the given truth values (and, for some cells, the trace does
or does not end here), the operator gets the given truth value. Cells
are expanded into evaluation rules by initialise().

Binary operators list the full grid of operand values, so exactly one
cell matches any combination. A cell whose result depends on the end of
the trace is split in two, one requiring END and one requiring !END.
"""
import logging
import typing

from rulerunner.common.exceptions import UnknownOperatorError
from rulerunner.formula import FormulaKind
from rulerunner.rulegen.qualifier import Qualifier, UNDECIDED_QUALIFIERS
from rulerunner.rulegen.truth_value import TruthValue

logger = logging.getLogger(__name__)

T, F, U = TruthValue.T, TruthValue.F, TruthValue.U


class Value(typing.NamedTuple):
    """A truth value together with its qualifier."""
    truth: TruthValue
    qualifier: Qualifier = Qualifier.NONE

    def __str__(self) -> str:
        return self.truth.value + self.qualifier.value


class TableCell(typing.NamedTuple):
    """
    One row of an evaluation table.

    operands holds one entry per child of the operator; None means the
    operand is not consulted. observed is only used by observation leaves
    and end by cells that depend on the end of the trace.
    """
    mode: Qualifier
    operands: typing.Tuple[typing.Optional[Value], ...]
    output: Value
    observed: typing.Optional[bool] = None
    end: typing.Optional[bool] = None


class TableContext(typing.NamedTuple):
    """
    Parameters of table construction.

    undecided_qualifiers lists the qualifiers an undecided operand may
    carry. Every operator accepts all of them, which keeps the table of an
    operator independent of the kinds of its operands.
    """
    undecided_qualifiers: typing.Tuple[Qualifier, ...] = UNDECIDED_QUALIFIERS

    def operand_values(self) -> typing.List[Value]:
        return [Value(T), Value(F)] + [Value(U, q) for q in self.undecided_qualifiers]


def _or(left: Value, right: Value) -> Value:
    if left.truth is T or right.truth is T:
        return Value(T)
    if left.truth is F and right.truth is F:
        return Value(F)
    if left.truth is U and right.truth is U:
        return Value(U, Qualifier.B)
    return Value(U, Qualifier.L if left.truth is U else Qualifier.R)


def _and(left: Value, right: Value) -> Value:
    if left.truth is F or right.truth is F:
        return Value(F)
    if left.truth is T and right.truth is T:
        return Value(T)
    if left.truth is U and right.truth is U:
        return Value(U, Qualifier.B)
    return Value(U, Qualifier.L if left.truth is U else Qualifier.R)


def _follow(value: Value, qualifier: Qualifier) -> Value:
    return Value(U, qualifier) if value.truth is U else Value(value.truth)


def _until(left: Value, right: Value, end: typing.Optional[bool]) -> Value:
    # left U right at this cell: right, or left and the until again next cell
    if right.truth is T:
        return Value(T)
    if right.truth is F:
        if left.truth is F:
            return Value(F)
        if left.truth is T:
            return Value(F) if end else Value(U, Qualifier.A)
        return Value(U, Qualifier.L)
    if left.truth is F:
        return Value(U, Qualifier.R)
    return Value(U, Qualifier.B)


def _boolean_cells(kind: FormulaKind, context: TableContext) -> typing.List[TableCell]:
    combine = _or if kind is FormulaKind.OR else _and
    values = context.operand_values()
    cells = [TableCell(Qualifier.B, (left, right), combine(left, right))
             for left in values for right in values]
    cells += [TableCell(Qualifier.L, (v, None), _follow(v, Qualifier.L)) for v in values]
    cells += [TableCell(Qualifier.R, (None, v), _follow(v, Qualifier.R)) for v in values]
    return cells


def _until_cells(context: TableContext) -> typing.List[TableCell]:
    values = context.operand_values()
    cells = []
    for mode in (Qualifier.A, Qualifier.B):
        for left in values:
            for right in values:
                if left.truth is T and right.truth is F:
                    cells.append(TableCell(mode, (left, right), _until(left, right, False), end=False))
                    cells.append(TableCell(mode, (left, right), _until(left, right, True), end=True))
                else:
                    cells.append(TableCell(mode, (left, right), _until(left, right, None)))
    for left in values:
        if left.truth is T:
            cells.append(TableCell(Qualifier.L, (left, None), Value(U, Qualifier.A), end=False))
            cells.append(TableCell(Qualifier.L, (left, None), Value(F), end=True))
        else:
            cells.append(TableCell(Qualifier.L, (left, None), _follow(left, Qualifier.L)))
    cells += [TableCell(Qualifier.R, (None, v), _follow(v, Qualifier.R)) for v in values]
    return cells


def _next_cells(kind: FormulaKind, context: TableContext) -> typing.List[TableCell]:
    at_end = Value(F) if kind is FormulaKind.NEXT else Value(T)
    cells = [
        TableCell(Qualifier.NONE, (None,), Value(U), end=False),
        TableCell(Qualifier.NONE, (None,), at_end, end=True),
    ]
    cells += [TableCell(Qualifier.M, (v,), _follow(v, Qualifier.M)) for v in context.operand_values()]
    return cells


def _eventually_cells(context: TableContext) -> typing.List[TableCell]:
    cells = [TableCell(Qualifier.NONE, (Value(T),), Value(T))]
    for v in context.operand_values()[1:]:
        cells.append(TableCell(Qualifier.NONE, (v,), Value(U), end=False))
        cells.append(TableCell(Qualifier.NONE, (v,), Value(F), end=True))
    return cells


def _always_cells(context: TableContext) -> typing.List[TableCell]:
    cells = [
        TableCell(Qualifier.NONE, (Value(F),), Value(F)),
        TableCell(Qualifier.NONE, (Value(T),), Value(U, Qualifier.K), end=False),
        TableCell(Qualifier.NONE, (Value(T),), Value(T), end=True),
    ]
    cells += [TableCell(Qualifier.NONE, (v,), Value(U)) for v in context.operand_values()[2:]]
    return cells


def build_tables(kind: FormulaKind, context: TableContext = TableContext()) -> typing.List[TableCell]:
    """
    Returns every cell of the evaluation table of an operator.

    :param kind: The operator; NOT has no table.
    :param context: Table construction parameters.
    :raises UnknownOperatorError: kind has no table.
    """
    if kind is FormulaKind.ATOM:
        return [TableCell(Qualifier.NONE, (), Value(T), observed=True),
                TableCell(Qualifier.NONE, (), Value(F), observed=False)]
    if kind is FormulaKind.NEG_ATOM:
        return [TableCell(Qualifier.NONE, (), Value(F), observed=True),
                TableCell(Qualifier.NONE, (), Value(T), observed=False)]
    if kind is FormulaKind.TRUE:
        return [TableCell(Qualifier.NONE, (), Value(T))]
    if kind is FormulaKind.END:
        return [TableCell(Qualifier.NONE, (), Value(T), end=True),
                TableCell(Qualifier.NONE, (), Value(F), end=False)]
    if kind in (FormulaKind.OR, FormulaKind.AND):
        return _boolean_cells(kind, context)
    if kind is FormulaKind.UNTIL:
        return _until_cells(context)
    if kind in (FormulaKind.NEXT, FormulaKind.WEAK_NEXT):
        return _next_cells(kind, context)
    if kind is FormulaKind.EVENTUALLY:
        return _eventually_cells(context)
    if kind is FormulaKind.ALWAYS:
        return _always_cells(context)
    raise UnknownOperatorError("no evaluation table for %s" % kind)
