"""
Judgements of the finite-trace temporal logic: truth constants, the
judgement that a formula holds at a position of a trace, and their joins
and meets.
"""
import typing
from dataclasses import dataclass

from rulerunner.formula import Formula, print_formula
from rulerunner.oracle import Trace, oracle_eval


class FltlJudgement:
    """Base class of judgement trees."""

    def simplify(self) -> "FltlJudgement":
        """
        Returns the tree with the lattice laws applied bottom up:
        top joined with anything is top, bottom met with anything is
        bottom, and bottom or top vanish from joins and meets respectively.
        """
        return self

    def leaves(self) -> typing.Iterator["Judge"]:
        return iter(())

    def value(self, trace: Trace) -> bool:
        """Evaluates the judgement on a complete trace."""
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()

    def render(self, nested: bool = False) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class _Constant(FltlJudgement):
    truth: bool

    def value(self, trace: Trace) -> bool:
        return self.truth

    def render(self, nested: bool = False) -> str:
        return "⊤" if self.truth else "⊥"


TOP = _Constant(True)
BOTTOM = _Constant(False)


@dataclass(frozen=True)
class Judge(FltlJudgement):
    """The judgement that formula holds at 0-based position index."""
    index: int
    formula: Formula

    def leaves(self) -> typing.Iterator["Judge"]:
        yield self

    def value(self, trace: Trace) -> bool:
        return oracle_eval(self.formula, trace, self.index)

    def render(self, nested: bool = False) -> str:
        return "[u,%d ⊨ %s]F" % (self.index, print_formula(self.formula))


@dataclass(frozen=True)
class _Binary(FltlJudgement):
    left: FltlJudgement
    right: FltlJudgement

    symbol: typing.ClassVar[str] = ""

    def leaves(self) -> typing.Iterator[Judge]:
        yield from self.left.leaves()
        yield from self.right.leaves()

    def render(self, nested: bool = False) -> str:
        text = "%s %s %s" % (self.left.render(True), self.symbol, self.right.render(True))
        return "(%s)" % text if nested else text


@dataclass(frozen=True)
class Join(_Binary):
    symbol: typing.ClassVar[str] = "⊔"

    def simplify(self) -> FltlJudgement:
        left, right = self.left.simplify(), self.right.simplify()
        if left == TOP or right == TOP:
            return TOP
        if left == BOTTOM:
            return right
        if right == BOTTOM:
            return left
        return Join(left, right)

    def value(self, trace: Trace) -> bool:
        return self.left.value(trace) or self.right.value(trace)


@dataclass(frozen=True)
class Meet(_Binary):
    symbol: typing.ClassVar[str] = "⊓"

    def simplify(self) -> FltlJudgement:
        left, right = self.left.simplify(), self.right.simplify()
        if left == BOTTOM or right == BOTTOM:
            return BOTTOM
        if left == TOP:
            return right
        if right == TOP:
            return left
        return Meet(left, right)

    def value(self, trace: Trace) -> bool:
        return self.left.value(trace) and self.right.value(trace)
