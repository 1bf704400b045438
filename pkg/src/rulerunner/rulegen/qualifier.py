from enum import Enum


class Qualifier(str, Enum):
    """
    Represents the subscript that refines an activation or an undecided
    truth value.

    - NONE: no qualifier.
    - B: both operands of |, & or U are still tracked; for U also the
      case where the until can no longer be satisfied immediately.
    - L: only the left operand is still tracked.
    - R: only the right operand is still tracked.
    - A: a standard until, restarted in every cell.
    - M: the mirroring phase of X and W, which copy their operand.
    - K: an always whose operand held so far; it becomes true if the
      trace ends.
    - P: an obligation node continued from the previous cell. It only
      qualifies activations.
    """
    NONE = ""
    B = "B"
    L = "L"
    R = "R"
    A = "A"
    M = "M"
    K = "K"
    P = "P"

    def __str__(self):
        return self.value


UNDECIDED_QUALIFIERS = (Qualifier.NONE, Qualifier.B, Qualifier.L, Qualifier.R,
                        Qualifier.A, Qualifier.M, Qualifier.K)
