import typing

from rulerunner.formula import FormulaKind, SubformulaTable, print_formula
from rulerunner.rulegen import state_atom
from rulerunner.rulegen.rule import Rule
from rulerunner.rulegen.state_atom import AtomKind, StateAtom


class SweepGroup(typing.NamedTuple):
    """
    The evaluation rules that share one activation atom, keyed by the
    first truth, observation or marker atom of their body so that a sweep
    only tests rules whose key atom is present.
    """
    activation: typing.Optional[StateAtom]
    keyed: typing.Tuple[typing.Tuple[StateAtom, typing.Tuple[Rule, ...]], ...]
    unkeyed: typing.Tuple[Rule, ...]


class ObligationSpec(typing.NamedTuple):
    """
    How an obligation node is tracked: every start of an operand runs as
    an instance of the operand's own rule system. operands holds one
    system per child of the node, left before right for an until.
    """
    kind: FormulaKind
    operands: typing.Tuple["RuleSystem", ...]


class LeafActivation(typing.NamedTuple):
    """An observation leaf: its activation, its absence atom and its name."""
    activation: StateAtom
    absent: StateAtom
    name: str


class RuleSystem:
    """
    The rule system compiled from one formula: evaluation rules,
    reactivation rules and the initial state.

    Evaluation rules are ordered by the post-order index of their owner,
    followed by the verdict rules of the root. Obligation nodes map to
    the rule systems of their operands; the nodes below them get no rules
    of their own in this system.

    .. note::
        Instances are immutable and may be shared by monitors running on
        different threads.
    """

    def __init__(self, eval_rules: typing.Sequence[Rule], react_rules: typing.Sequence[Rule],
                 initial_state: typing.Iterable[StateAtom], subformulas: SubformulaTable,
                 obligations: typing.Mapping[int, ObligationSpec] = None):
        self.__eval_rules = tuple(eval_rules)
        self.__react_rules = tuple(react_rules)
        self.__initial_state = frozenset(initial_state)
        self.__subformulas = subformulas
        self.__obligations = tuple(sorted((obligations or {}).items()))
        self.__leaf_names = {node.index: node.name for node in subformulas
                             if node.kind in (FormulaKind.ATOM, FormulaKind.NEG_ATOM)}
        owners = {rule.owner for rule in self.__eval_rules}
        self.__leaves = tuple(LeafActivation(state_atom.act(i), state_atom.absent(name), name)
                              for i, name in sorted(self.__leaf_names.items()) if i in owners)
        self.__observation_names = frozenset(self.__leaf_names.values())
        self.__labels = [print_formula(node) for node in subformulas]
        self.__sweep = self.__build_sweep()

    @property
    def eval_rules(self) -> typing.Tuple[Rule, ...]:
        return self.__eval_rules

    @property
    def react_rules(self) -> typing.Tuple[Rule, ...]:
        return self.__react_rules

    @property
    def initial_state(self) -> typing.FrozenSet[StateAtom]:
        return self.__initial_state

    @property
    def subformulas(self) -> SubformulaTable:
        return self.__subformulas

    @property
    def obligations(self) -> typing.Tuple[typing.Tuple[int, ObligationSpec], ...]:
        """The (node index, spec) pairs of the obligation nodes, by index."""
        return self.__obligations

    def obligation_of(self, node: int) -> typing.Optional[ObligationSpec]:
        for index, spec in self.__obligations:
            if index == node:
                return spec
        return None

    @property
    def leaf_names(self) -> typing.Dict[int, str]:
        """Maps the index of every observation leaf to its observation name."""
        return dict(self.__leaf_names)

    @property
    def leaves(self) -> typing.Tuple[LeafActivation, ...]:
        """The observation leaves that have rules in this system."""
        return self.__leaves

    @property
    def observation_names(self) -> typing.FrozenSet[str]:
        """Every observation name the formula refers to, obligations included."""
        return self.__observation_names

    def observation_of(self, node: int) -> typing.Optional[str]:
        return self.__leaf_names.get(node)

    def describe(self, node: int) -> str:
        """Returns the canonical text of the subformula with the given index."""
        return self.__labels[node]

    @property
    def sweep(self) -> typing.Tuple[SweepGroup, ...]:
        """The evaluation rules grouped for a single ordered pass."""
        return self.__sweep

    def __build_sweep(self) -> typing.Tuple[SweepGroup, ...]:
        groups: typing.List[SweepGroup] = []
        current: typing.Optional[StateAtom] = None
        keyed: typing.Dict[StateAtom, typing.List[Rule]] = {}
        unkeyed: typing.List[Rule] = []
        started = False

        def close():
            groups.append(SweepGroup(current, tuple((k, tuple(v)) for k, v in keyed.items()), tuple(unkeyed)))

        for rule in self.__eval_rules:
            activation = rule.activation
            if not started or activation != current:
                if started:
                    close()
                current, keyed, unkeyed, started = activation, {}, [], True
            key = _key_atom(rule, activation)
            if key is None:
                unkeyed.append(rule)
            else:
                keyed.setdefault(key, []).append(rule)
        if started:
            close()
        return tuple(groups)


def _key_atom(rule: Rule, activation: typing.Optional[StateAtom]) -> typing.Optional[StateAtom]:
    candidates = sorted((a for a in rule.body if a != activation),
                        key=lambda a: (a.kind is not AtomKind.TRUTH, a.node, int(a.kind), a.name))
    return candidates[0] if candidates else None
