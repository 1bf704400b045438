from enum import Enum


class Irrevocability(Enum):
    """
    Result of checking a formula against every extension of a prefix.

    - ALWAYS_TRUE: the formula holds on every extension.
    - ALWAYS_FALSE: the formula fails on every extension.
    - VARIES: some extensions satisfy it and some do not.
    """
    ALWAYS_TRUE = "AlwaysTrue"
    ALWAYS_FALSE = "AlwaysFalse"
    VARIES = "Varies"

    def __str__(self):
        return self.value
