import typing
from dataclasses import dataclass, field

from rulerunner.formula.formula_kind import FormulaKind


@dataclass(frozen=True)
class Formula:
    """
    One node of a formula tree.

    Nodes are immutable. Equality and hashing are structural and ignore
    the post-order index, so two occurrences of the same subformula
    compare equal while still being distinct nodes of the tree; code that
    needs node identity uses the index.

    index is -1 until the tree is numbered by post_order().
    """
    kind: FormulaKind
    name: typing.Optional[str] = None
    children: typing.Tuple["Formula", ...] = ()
    index: int = field(default=-1, compare=False)

    @staticmethod
    def true() -> "Formula":
        return Formula(FormulaKind.TRUE)

    @staticmethod
    def end() -> "Formula":
        return Formula(FormulaKind.END)

    @staticmethod
    def atom(name: str) -> "Formula":
        return Formula(FormulaKind.ATOM, name)

    @staticmethod
    def neg_atom(name: str) -> "Formula":
        return Formula(FormulaKind.NEG_ATOM, name)

    @staticmethod
    def unary(kind: FormulaKind, child: "Formula") -> "Formula":
        return Formula(kind, None, (child,))

    @staticmethod
    def binary(kind: FormulaKind, left: "Formula", right: "Formula") -> "Formula":
        return Formula(kind, None, (left, right))

    @property
    def left(self) -> "Formula":
        return self.children[0]

    @property
    def right(self) -> "Formula":
        return self.children[1]

    @property
    def child(self) -> "Formula":
        return self.children[0]

    def size(self) -> int:
        """Returns the number of nodes of this tree."""
        return 1 + sum(c.size() for c in self.children)

    def height(self) -> int:
        """Returns the height of this tree; a leaf has height 1."""
        return 1 + max((c.height() for c in self.children), default=0)

    def atoms(self) -> typing.FrozenSet[str]:
        """Returns the observation names referenced by this tree."""
        if self.name is not None:
            return frozenset((self.name,))
        result = frozenset()
        for c in self.children:
            result |= c.atoms()
        return result

    def walk(self) -> typing.Iterator["Formula"]:
        """Yields the nodes of this tree in post-order."""
        for c in self.children:
            yield from c.walk()
        yield self

    def __str__(self) -> str:
        return print_formula(self)


def print_formula(f: Formula) -> str:
    """
    Returns the fully parenthesized canonical text of a formula.

    Binary operators are always wrapped in parentheses and prefix
    operators are separated from their operand by a space, so the result
    parses back to the same tree.
    """
    kind = f.kind
    if kind is FormulaKind.TRUE:
        return "true"
    if kind is FormulaKind.END:
        return "END"
    if kind is FormulaKind.ATOM:
        return f.name
    if kind is FormulaKind.NEG_ATOM:
        return "!" + f.name
    if kind.arity == 2:
        return "(%s %s %s)" % (print_formula(f.left), kind.value, print_formula(f.right))
    if kind is FormulaKind.NOT:
        return "!" + print_formula(f.child)
    return "%s %s" % (kind.value, print_formula(f.child))


_RESTARTING = (FormulaKind.EVENTUALLY, FormulaKind.ALWAYS, FormulaKind.UNTIL)


def restarts_temporal_operand(node: Formula) -> bool:
    """
    Tests whether node is an eventually, always or until with an operand
    that holds a temporal operator.

    These operators restart their operands in every cell while they are
    undecided, and such an operand can still be pending from an earlier
    start when it is started again. The rule system tracks these nodes as
    obligations, one instance per pending start.
    """
    if node.kind not in _RESTARTING:
        return False
    return any(n.kind.is_temporal for operand in node.children for n in operand.walk())


def is_restart_safe(f: Formula) -> bool:
    """Tests whether the rule system of f needs no obligations."""
    return not any(restarts_temporal_operand(node) for node in f.walk())


def desugar_eventually(f: Formula) -> Formula:
    """Rewrites every eventually node F a into (true U a)."""
    children = tuple(desugar_eventually(c) for c in f.children)
    if f.kind is FormulaKind.EVENTUALLY:
        return Formula.binary(FormulaKind.UNTIL, Formula.true(), children[0])
    if children == f.children:
        return f
    return Formula(f.kind, f.name, children)
