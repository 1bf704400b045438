import typing

from rulerunner.rulegen import StateAtom


class CellEvent:
    """
    This class is used by the MonitorListener.on_cell event of the
    Monitor class.

    It carries the four rows of the state evolution of one cell: the
    activations the cell started with, the state after the observations
    were added, the atoms derived by evaluation and the activations
    scheduled for the next cell. react is empty when the cell ended with
    a verdict.

    obligation_starts maps every obligation node active in the cell to
    the 0-based position it was started at.
    """

    def __init__(self, source: object, cell_index: int,
                 state: typing.FrozenSet[StateAtom],
                 observed: typing.FrozenSet[StateAtom],
                 derived: typing.Tuple[StateAtom, ...],
                 react: typing.FrozenSet[StateAtom],
                 rounds: int,
                 obligation_starts: typing.Mapping[int, int] = None):
        """Initializes a CellEvent instance.

        :param source: the monitor which fired the event.
        :param cell_index: the 1-based index of the cell.
        :param state: the state before the observations were ingested.
        :param observed: the state after the observations were ingested.
        :param derived: the atoms derived by evaluation, in derivation order.
        :param react: the state after reactivation.
        :param rounds: the forward chaining rounds evaluation took.
        :param obligation_starts: the start position of every active obligation node.
        """
        self.__set_source(source)
        self.__cell_index = cell_index
        self.__state = state
        self.__observed = observed
        self.__derived = derived
        self.__react = react
        self.__rounds = rounds
        self.__obligation_starts = dict(obligation_starts or {})

    @property
    def source(self):
        """This property returns the monitor which fired the event."""
        return self.__source

    @property
    def cell_index(self) -> int:
        return self.__cell_index

    @property
    def state(self) -> typing.FrozenSet[StateAtom]:
        return self.__state

    @property
    def observed(self) -> typing.FrozenSet[StateAtom]:
        return self.__observed

    @property
    def derived(self) -> typing.Tuple[StateAtom, ...]:
        return self.__derived

    @property
    def react(self) -> typing.FrozenSet[StateAtom]:
        return self.__react

    @property
    def rounds(self) -> int:
        return self.__rounds

    @property
    def obligation_starts(self) -> typing.Dict[int, int]:
        return dict(self.__obligation_starts)

    def __set_source(self, source: object):
        if source is None:
            raise ValueError("Source is None")
        self.__source = source
