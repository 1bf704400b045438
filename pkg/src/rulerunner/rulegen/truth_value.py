from enum import Enum


class TruthValue(str, Enum):
    """
    Represents the three truth values a subformula can take in a cell.

    - T: the subformula holds.
    - F: the subformula fails.
    - U: undecided in the current cell; printed as "?".
    """
    T = "T"
    F = "F"
    U = "?"

    def __str__(self):
        return self.value
