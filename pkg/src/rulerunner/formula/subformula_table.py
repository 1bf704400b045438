import typing

from rulerunner.common.exceptions import NormalFormError
from rulerunner.formula.formula import Formula
from rulerunner.formula.formula_kind import FormulaKind


class SubformulaTable:
    """
    The nodes of a numbered formula tree in post-order.

    Position i of the table holds the node whose index is i; children
    always precede their parents and the root is last.

    .. note::
        Instances are immutable and may be shared between threads.
    """

    def __init__(self, nodes: typing.Sequence[Formula]):
        self.__nodes: typing.Tuple[Formula, ...] = tuple(nodes)
        self.__parents: typing.Dict[int, int] = {}
        for node in self.__nodes:
            for c in node.children:
                self.__parents[c.index] = node.index

    def __len__(self) -> int:
        return len(self.__nodes)

    def __getitem__(self, index: int) -> Formula:
        return self.__nodes[index]

    def __iter__(self) -> typing.Iterator[Formula]:
        return iter(self.__nodes)

    @property
    def root(self) -> Formula:
        return self.__nodes[-1]

    def parent_of(self, index: int) -> typing.Optional[int]:
        """Returns the index of the parent of a node, or None for the root."""
        return self.__parents.get(index)


def post_order(f: Formula) -> SubformulaTable:
    """
    Numbers the nodes of f in post-order and returns them as a table.

    Every node receives a distinct index, also when the same subformula
    occurs at several positions.

    :raises NormalFormError: f still contains a NOT node.
    """
    nodes: typing.List[Formula] = []

    def visit(node: Formula) -> Formula:
        if node.kind is FormulaKind.NOT:
            raise NormalFormError("post_order expects a formula in negation normal form")
        children = tuple(visit(c) for c in node.children)
        numbered = Formula(node.kind, node.name, children, len(nodes))
        nodes.append(numbered)
        return numbered

    visit(f)
    return SubformulaTable(nodes)
