import logging

from rulerunner.common.exceptions import NormalFormError
from rulerunner.formula.formula import Formula, print_formula
from rulerunner.formula.formula_kind import FormulaKind

logger = logging.getLogger(__name__)

_DUALS = {
    FormulaKind.OR: FormulaKind.AND,
    FormulaKind.AND: FormulaKind.OR,
    FormulaKind.NEXT: FormulaKind.WEAK_NEXT,
    FormulaKind.WEAK_NEXT: FormulaKind.NEXT,
    FormulaKind.EVENTUALLY: FormulaKind.ALWAYS,
    FormulaKind.ALWAYS: FormulaKind.EVENTUALLY,
}


def normalize_nnf(f: Formula) -> Formula:
    """
    Pushes every negation down to the observation names.

    Applies the dualities between | and &, X and W, F and G, and cancels
    double negations. The result contains no NOT node; applying the
    function again returns an equal tree.

    :raises NormalFormError: a negation reaches an until, true or END,
        none of which has a dual in the grammar.
    """
    if f.kind is FormulaKind.NOT:
        return _negate(f.child)
    if f.kind.is_leaf:
        return Formula(f.kind, f.name)
    return Formula(f.kind, None, tuple(normalize_nnf(c) for c in f.children))


def _negate(f: Formula) -> Formula:
    kind = f.kind
    if kind is FormulaKind.NOT:
        return normalize_nnf(f.child)
    if kind is FormulaKind.ATOM:
        return Formula.neg_atom(f.name)
    if kind is FormulaKind.NEG_ATOM:
        return Formula.atom(f.name)
    if kind in _DUALS:
        return Formula(_DUALS[kind], None, tuple(_negate(c) for c in f.children))
    if kind is FormulaKind.UNTIL:
        raise NormalFormError("no NNF form in grammar: cannot negate %s (no release operator)"
                              % print_formula(f))
    logger.debug("Rejected negation of %s", kind)
    raise NormalFormError("no NNF form in grammar: cannot negate %s" % print_formula(f))


def is_nnf(f: Formula) -> bool:
    """Tests whether f contains no NOT node."""
    return all(node.kind is not FormulaKind.NOT for node in f.walk())
