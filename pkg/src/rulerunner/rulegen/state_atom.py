import functools
import typing
from enum import IntEnum

from rulerunner.rulegen.qualifier import Qualifier
from rulerunner.rulegen.truth_value import TruthValue


class AtomKind(IntEnum):
    """
    Represents the kinds of facts a monitor state can hold.

    - OBS_PRESENT: an observation seen in the current cell.
    - OBS_ABSENT: an observation known to be missing from the current cell.
    - END_MARKER: the current cell is the last one.
    - NOT_END: the current cell is not the last one.
    - RULE_ACT: a subformula is being monitored, R[f] with a qualifier.
    - TRUTH: the truth value of a subformula, [f]V with a qualifier.
    - SUCCESS, FAILURE: the verdicts.
    - REPEAT: the formula is undecided and monitoring goes on.
    - OBLIGATION: the value an obligation node has in the current cell,
      computed from its pending instances when the cell is ingested.
    """
    OBS_PRESENT = 0
    OBS_ABSENT = 1
    END_MARKER = 2
    NOT_END = 3
    RULE_ACT = 4
    TRUTH = 5
    SUCCESS = 6
    FAILURE = 7
    REPEAT = 8
    OBLIGATION = 9


class StateAtom(typing.NamedTuple):
    """
    One fact of a monitor state.

    Atoms are plain tuples so that states can be hashed quickly; build
    them with the factory functions of this module rather than directly.
    node is the post-order index of the subformula for RULE_ACT, TRUTH
    and OBLIGATION atoms and -1 otherwise; name is the observation name
    for OBS_* atoms.
    """
    kind: AtomKind
    node: int = -1
    value: typing.Optional[TruthValue] = None
    qualifier: Qualifier = Qualifier.NONE
    name: str = ""

    def is_truth(self, value: TruthValue = None) -> bool:
        return self.kind is AtomKind.TRUTH and (value is None or self.value is value)

    def format(self, describe: typing.Callable[[int], str] = None) -> str:
        """
        Returns the text form used by rule dumps and evolution tables:
        ``R[f]Z``, ``[f]VZ``, ``O[f]V``, ``obs:a``, ``!obs:a``, ``END``, ``!END``,
        ``SUCCESS``, ``FAILURE`` and ``REPEAT``.

        :param describe: Maps a node index to the formula text shown
            between the brackets; defaults to ``#index``.
        """
        kind = self.kind
        if kind is AtomKind.RULE_ACT or kind is AtomKind.TRUTH or kind is AtomKind.OBLIGATION:
            label = describe(self.node) if describe is not None else "#%d" % self.node
            if kind is AtomKind.RULE_ACT:
                return "R[%s]%s" % (label, self.qualifier.value)
            if kind is AtomKind.OBLIGATION:
                return "O[%s]%s" % (label, self.value.value)
            return "[%s]%s%s" % (label, self.value.value, self.qualifier.value)
        if kind is AtomKind.OBS_PRESENT:
            return "obs:" + self.name
        if kind is AtomKind.OBS_ABSENT:
            return "!obs:" + self.name
        return _FIXED_TEXT[kind]

    def __str__(self) -> str:
        return self.format()


_FIXED_TEXT = {
    AtomKind.END_MARKER: "END",
    AtomKind.NOT_END: "!END",
    AtomKind.SUCCESS: "SUCCESS",
    AtomKind.FAILURE: "FAILURE",
    AtomKind.REPEAT: "REPEAT",
}


@functools.lru_cache(maxsize=4096)
def obs(name: str) -> StateAtom:
    return StateAtom(AtomKind.OBS_PRESENT, name=name)


@functools.lru_cache(maxsize=4096)
def absent(name: str) -> StateAtom:
    return StateAtom(AtomKind.OBS_ABSENT, name=name)


def act(node: int, qualifier: Qualifier = Qualifier.NONE) -> StateAtom:
    return StateAtom(AtomKind.RULE_ACT, node, None, qualifier)


def truth(node: int, value: TruthValue, qualifier: Qualifier = Qualifier.NONE) -> StateAtom:
    if value is not TruthValue.U and qualifier is not Qualifier.NONE:
        raise ValueError("only undecided truth values carry a qualifier")
    return StateAtom(AtomKind.TRUTH, node, value, qualifier)


def obligation(node: int, value: TruthValue) -> StateAtom:
    return StateAtom(AtomKind.OBLIGATION, node, value)


END_MARKER = StateAtom(AtomKind.END_MARKER)
NOT_END = StateAtom(AtomKind.NOT_END)
SUCCESS = StateAtom(AtomKind.SUCCESS)
FAILURE = StateAtom(AtomKind.FAILURE)
REPEAT = StateAtom(AtomKind.REPEAT)


def sort_key(atom: StateAtom) -> tuple:
    """
    Orders atoms the way evolution tables list them: activations by node,
    then observations by name, truth values by node, then markers and
    verdicts last.
    """
    group = {
        AtomKind.RULE_ACT: 0,
        AtomKind.OBS_PRESENT: 1,
        AtomKind.OBS_ABSENT: 2,
        AtomKind.OBLIGATION: 2,
        AtomKind.TRUTH: 3,
        AtomKind.END_MARKER: 4,
        AtomKind.NOT_END: 4,
    }.get(atom.kind, 5)
    return group, atom.node, atom.name, int(atom.kind)
