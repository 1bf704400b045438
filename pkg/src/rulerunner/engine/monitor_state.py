import typing
from dataclasses import dataclass

from rulerunner.engine.phase import Phase
from rulerunner.rulegen import AtomKind, StateAtom


@dataclass(frozen=True)
class MonitorState:
    """
    The knowledge base of a monitor at one point of a cell.

    atoms is the current set of facts. is_last is None until the
    observations of the current cell have been ingested. derived lists the
    atoms added by evaluation in the order they were derived and rounds
    counts the forward chaining rounds the evaluation took.

    obligations pairs the index of every active obligation node with its
    pending instances. After ingestion they have already been moved
    through the current cell.
    """
    atoms: typing.FrozenSet[StateAtom]
    cell_index: int = 1
    phase: Phase = Phase.AWAITING_CELL
    is_last: typing.Optional[bool] = None
    derived: typing.Tuple[StateAtom, ...] = ()
    rounds: int = 0
    obligations: typing.Tuple[typing.Tuple[int, typing.Any], ...] = ()

    @property
    def ingested(self) -> bool:
        return self.is_last is not None

    def has(self, kind: AtomKind) -> bool:
        return any(a.kind is kind for a in self.atoms)

    def obligation_starts(self) -> typing.Dict[int, int]:
        """Maps every active obligation node to the position it started at."""
        return {node: obligation.start for node, obligation in self.obligations}

    def footprint(self) -> int:
        """Counts the atoms of this state and of every pending obligation instance in it."""
        return len(self.atoms) + sum(instance.footprint() for _, obligation in self.obligations
                                     for instance in obligation.instances())

    def __len__(self) -> int:
        return len(self.atoms)
