from enum import Enum


class EvaluationMode(Enum):
    """
    Selects how the engine closes a cell under the evaluation rules.

    - FIXPOINT:
    Applies forward chaining over all evaluation rules repeatedly until the
    state stops growing. The number of rounds grows with the height of the
    formula.

    - SINGLE_PASS:
    Visits the evaluation rules once, ordered by the post-order index of
    the subformula they evaluate, so that every child is evaluated before
    its parent.
    """
    FIXPOINT = "fixpoint"
    SINGLE_PASS = "singlepass"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, value: str) -> "EvaluationMode":
        """
        Returns the mode named by value ("fixpoint" or "singlepass",
        case-insensitive, dashes and underscores ignored).

        :raises ValueError: value names no mode.
        """
        if not isinstance(value, str):
            raise TypeError("value must be a string")
        normalized = value.strip().lower().replace("-", "").replace("_", "")
        for mode in cls:
            if mode.value == normalized:
                return mode
        raise ValueError("unknown evaluation mode: %r" % value)
