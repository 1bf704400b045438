import typing
from dataclasses import dataclass
from enum import Enum

from rulerunner.rulegen.state_atom import AtomKind, StateAtom, sort_key
from rulerunner.rulegen.truth_value import TruthValue


class Stage(Enum):
    """
    - EVALUATION: computes truth values within a cell.
    - REACTIVATION: schedules the activations of the next cell.
    """
    EVALUATION = "evaluation"
    REACTIVATION = "reactivation"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Rule:
    """
    A Horn clause ``body -> head`` owned by one subformula.

    A reactivation with several heads is stored as one Rule per head,
    all sharing the same body.
    """
    body: typing.FrozenSet[StateAtom]
    head: StateAtom
    stage: Stage
    owner: int

    def __post_init__(self):
        if not self.body:
            raise ValueError("a rule needs a nonempty body")
        if self.stage is Stage.REACTIVATION:
            undecided = [a for a in self.body if a.is_truth(TruthValue.U)]
            if len(undecided) != 1:
                raise ValueError("a reactivation rule is triggered by exactly one undecided value")

    @property
    def activation(self) -> typing.Optional[StateAtom]:
        """The RuleAct atom of the body, or None for verdict and reactivation rules."""
        for atom in self.body:
            if atom.kind is AtomKind.RULE_ACT:
                return atom
        return None

    def format(self, describe: typing.Callable[[int], str] = None) -> str:
        body = " & ".join(a.format(describe) for a in sorted(self.body, key=sort_key))
        return "%s -> %s" % (body, self.head.format(describe))

    def __str__(self) -> str:
        return self.format()
