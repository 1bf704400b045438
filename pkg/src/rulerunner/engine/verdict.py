import typing
from dataclasses import dataclass
from enum import Enum


class Outcome(Enum):
    """
    Represents the two verdicts a monitor can issue.

    - SUCCESS: every continuation of the cells seen so far satisfies the
      formula.
    - FAILURE: no continuation does.
    """
    SUCCESS = "SUCCESS"
    FAILURE = "FAILURE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    """The final result of a monitor, issued at cell at_cell (1-based)."""
    outcome: Outcome
    at_cell: int
    cells_consumed: int

    @property
    def succeeded(self) -> bool:
        return self.outcome is Outcome.SUCCESS

    def __str__(self) -> str:
        return "%s@%d" % (self.outcome.value, self.at_cell)


@dataclass(frozen=True)
class Pending:
    """Returned for a cell after which the formula is still undecided."""
    cell_index: int

    def __str__(self) -> str:
        return "PENDING@%d" % self.cell_index


MonitorResult = typing.Union[Verdict, Pending]
