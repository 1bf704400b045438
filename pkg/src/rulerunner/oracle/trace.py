import re
import typing
from dataclasses import dataclass

OBSERVATION_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


@dataclass(frozen=True)
class Trace:
    """
    A finite, nonempty sequence of cells; each cell is the set of
    observation names seen at that position. The last cell implicitly
    carries the end-of-trace marker.
    """
    cells: typing.Tuple[typing.FrozenSet[str], ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a trace has at least one cell")
        for cell in self.cells:
            for name in cell:
                if name == "true" or not OBSERVATION_NAME.match(name):
                    raise ValueError("invalid observation name: %r" % name)

    @staticmethod
    def of(*cells: typing.Iterable[str]) -> "Trace":
        """Builds a trace from iterables of observation names."""
        return Trace(tuple(frozenset(cell) for cell in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, i: int) -> typing.FrozenSet[str]:
        return self.cells[i]

    def prefix(self, k: int) -> "Trace":
        """Returns the trace made of the first k cells."""
        return Trace(self.cells[:k])
