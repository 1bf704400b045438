import logging
import typing

import pyparsing as pp

from rulerunner.common.exceptions import FormulaSyntaxError
from rulerunner.formula.formula import Formula
from rulerunner.formula.formula_kind import FormulaKind

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

_PREFIX = {
    "!": FormulaKind.NOT,
    "X": FormulaKind.NEXT,
    "W": FormulaKind.WEAK_NEXT,
    "F": FormulaKind.EVENTUALLY,
    "G": FormulaKind.ALWAYS,
}
_INFIX = {
    "|": FormulaKind.OR,
    "&": FormulaKind.AND,
    "U": FormulaKind.UNTIL,
}


def _make_atom(tokens: pp.ParseResults) -> Formula:
    text = tokens[0]
    if text == "true":
        return Formula.true()
    if text == "END":
        return Formula.end()
    return Formula.atom(text)


def _make_prefix(tokens: pp.ParseResults) -> Formula:
    group = list(tokens[0])
    operand = group[-1]
    for op in reversed(group[:-1]):
        kind = _PREFIX[op]
        if kind is FormulaKind.NOT and operand.kind is FormulaKind.ATOM:
            operand = Formula.neg_atom(operand.name)
        else:
            operand = Formula.unary(kind, operand)
    return operand


def _fold_left(tokens: pp.ParseResults) -> Formula:
    group = list(tokens[0])
    result = group[0]
    for i in range(1, len(group), 2):
        result = Formula.binary(_INFIX[group[i]], result, group[i + 1])
    return result


def _fold_right(tokens: pp.ParseResults) -> Formula:
    group = list(tokens[0])
    result = group[-1]
    for i in range(len(group) - 2, 0, -2):
        result = Formula.binary(_INFIX[group[i]], group[i - 1], result)
    return result


def _create_parser() -> pp.ParserElement:
    identifier = pp.Regex(r"[a-z][a-zA-Z0-9_]*")
    end = pp.Literal("END")
    operand = (end | identifier).set_parse_action(_make_atom)

    # operators are single characters; identifiers start lowercase, so
    # "Fa" reads as F applied to a
    prefix = pp.one_of("! X W F G")
    return pp.infix_notation(operand, [
        (prefix, 1, pp.OpAssoc.RIGHT, _make_prefix),
        (pp.Literal("&"), 2, pp.OpAssoc.LEFT, _fold_left),
        (pp.Literal("U"), 2, pp.OpAssoc.RIGHT, _fold_right),
        (pp.Literal("|"), 2, pp.OpAssoc.LEFT, _fold_left),
    ])


_PARSER = _create_parser()


def _check_parentheses(text: str) -> None:
    stack: typing.List[int] = []
    for position, char in enumerate(text):
        if char == "(":
            stack.append(position)
        elif char == ")":
            if not stack:
                raise FormulaSyntaxError("unbalanced parentheses: unexpected ')'", position)
            stack.pop()
    if stack:
        raise FormulaSyntaxError("unbalanced parentheses: '(' is never closed", stack[-1])


def parse_formula(text: str) -> Formula:
    """
    Parses a formula text into an unnumbered tree.

    Syntax: observation names ``[a-z][a-zA-Z0-9_]*``, ``true``, ``END``,
    prefix ``!``, ``X``, ``W``, ``F`` (eventually) and ``G`` (always),
    infix ``&``, ``U`` and ``|`` in decreasing binding strength, and
    parentheses. ``&`` and ``|`` associate to the left, ``U`` to the right.

    ``!`` applied to an observation name yields a negated atom; applied
    to anything else it yields a NOT node for normalize_nnf() to remove.

    :raises FormulaSyntaxError: text is empty, has unbalanced parentheses
        or does not follow the grammar.
    """
    if not isinstance(text, str):
        raise TypeError("text must be a string")
    if not text.strip():
        raise FormulaSyntaxError("empty formula", 0)
    _check_parentheses(text)
    try:
        result = _PARSER.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise FormulaSyntaxError("syntax error: %s" % e.msg, e.loc)
    except RecursionError:
        raise FormulaSyntaxError("formula is nested too deeply", 0)
    formula = result[0]
    logger.debug("Parsed %r into %d nodes", text, formula.size())
    return formula
