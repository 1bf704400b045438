from enum import Enum


class Phase(Enum):
    """
    Represents where a monitor stands within the current cell.

    - AWAITING_CELL: the state holds activations only and waits for the
      observations of the next cell.
    - EVALUATED: the cell has been evaluated without reaching a verdict;
      reactivation comes next.
    - HALTED: a verdict has been reached; the rest of the trace is ignored.
    """
    AWAITING_CELL = "awaiting-cell"
    EVALUATED = "evaluated"
    HALTED = "halted"

    def __str__(self):
        return self.value
