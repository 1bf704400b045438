from enum import Enum


class FormulaKind(Enum):
    """
    Represents the node kinds of a formula tree.

    - TRUE: the constant true, satisfied by every cell.
    - ATOM: an observation name, true in a cell that contains it.
    - NEG_ATOM: a negated observation name.
    - END: true exactly in the last cell of the trace.
    - OR, AND: binary boolean connectives.
    - UNTIL: strong until.
    - NEXT: strong next, false in the last cell.
    - WEAK_NEXT: weak next, true in the last cell.
    - EVENTUALLY, ALWAYS: the derived unary temporal operators.
    - NOT: general negation. Only the parser produces it; normal form
      removes it.
    """
    TRUE = "true"
    ATOM = "atom"
    NEG_ATOM = "neg-atom"
    END = "END"
    OR = "|"
    AND = "&"
    UNTIL = "U"
    NEXT = "X"
    WEAK_NEXT = "W"
    EVENTUALLY = "F"
    ALWAYS = "G"
    NOT = "!"

    def __str__(self):
        return "%s" % self._name_

    @property
    def arity(self) -> int:
        if self in _BINARY:
            return 2
        if self in _UNARY:
            return 1
        return 0

    @property
    def is_temporal(self) -> bool:
        return self in _TEMPORAL

    @property
    def is_leaf(self) -> bool:
        return self.arity == 0


_BINARY = frozenset({FormulaKind.OR, FormulaKind.AND, FormulaKind.UNTIL})
_UNARY = frozenset({FormulaKind.NEXT, FormulaKind.WEAK_NEXT, FormulaKind.EVENTUALLY,
                    FormulaKind.ALWAYS, FormulaKind.NOT})
_TEMPORAL = frozenset({FormulaKind.UNTIL, FormulaKind.NEXT, FormulaKind.WEAK_NEXT,
                       FormulaKind.EVENTUALLY, FormulaKind.ALWAYS})
