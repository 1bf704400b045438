from rulerunner.formula.formula_kind import FormulaKind
from rulerunner.formula.formula import (Formula, print_formula, is_restart_safe, restarts_temporal_operand,
                                       desugar_eventually)
from rulerunner.formula.parser import parse_formula
from rulerunner.formula.nnf import normalize_nnf, is_nnf
from rulerunner.formula.subformula_table import SubformulaTable, post_order


def compile_formula(text: str) -> Formula:
    """
    Parses text, brings it into negation normal form and numbers its
    nodes. Returns the numbered root.
    """
    return post_order(normalize_nnf(parse_formula(text))).root
