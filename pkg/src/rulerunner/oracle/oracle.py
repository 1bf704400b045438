import itertools
import logging
import typing

from rulerunner.common.exceptions import BudgetExceededError
from rulerunner.formula import Formula, FormulaKind
from rulerunner.oracle.irrevocability import Irrevocability
from rulerunner.oracle.trace import Trace

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000

_Cells = typing.Tuple[typing.FrozenSet[str], ...]


def oracle_eval(f: Formula, u: Trace, i: int = 0) -> bool:
    """
    Decides whether f holds at position i of the complete trace u.

    Strong next is false and weak next is true at the last position; END
    holds exactly there. Eventually and always are evaluated directly
    rather than through until.

    :raises IndexError: i is not a position of u.
    """
    n = len(u)
    if not 0 <= i < n:
        raise IndexError("position %d outside a trace of %d cells" % (i, n))
    return _eval(f, u.cells, n, i, {})


def _eval(f: Formula, cells: _Cells, n: int, i: int, memo: dict) -> bool:
    key = (id(f), i)
    cached = memo.get(key)
    if cached is not None:
        return cached

    kind = f.kind
    if kind is FormulaKind.TRUE:
        result = True
    elif kind is FormulaKind.ATOM:
        result = f.name in cells[i]
    elif kind is FormulaKind.NEG_ATOM:
        result = f.name not in cells[i]
    elif kind is FormulaKind.END:
        result = i == n - 1
    elif kind is FormulaKind.NOT:
        result = not _eval(f.child, cells, n, i, memo)
    elif kind is FormulaKind.OR:
        result = _eval(f.left, cells, n, i, memo) or _eval(f.right, cells, n, i, memo)
    elif kind is FormulaKind.AND:
        result = _eval(f.left, cells, n, i, memo) and _eval(f.right, cells, n, i, memo)
    elif kind is FormulaKind.NEXT:
        result = i + 1 < n and _eval(f.child, cells, n, i + 1, memo)
    elif kind is FormulaKind.WEAK_NEXT:
        result = i + 1 >= n or _eval(f.child, cells, n, i + 1, memo)
    elif kind is FormulaKind.EVENTUALLY:
        result = any(_eval(f.child, cells, n, k, memo) for k in range(i, n))
    elif kind is FormulaKind.ALWAYS:
        result = all(_eval(f.child, cells, n, k, memo) for k in range(i, n))
    elif kind is FormulaKind.UNTIL:
        result = False
        for k in range(i, n):
            if _eval(f.right, cells, n, k, memo):
                result = True
                break
            if not _eval(f.left, cells, n, k, memo):
                break
    else:
        raise ValueError("unknown formula kind: %s" % kind)

    memo[key] = result
    return result


def subsets(alphabet: typing.Iterable[str]) -> typing.List[typing.FrozenSet[str]]:
    """Returns every subset of alphabet, smallest first."""
    letters = sorted(set(alphabet))
    return [frozenset(c) for r in range(len(letters) + 1) for c in itertools.combinations(letters, r)]


def extension_count(alphabet_size: int, horizon: int, min_extension: int = 0) -> int:
    """Returns the number of extensions of min_extension..horizon cells over an alphabet."""
    per_cell = 2 ** alphabet_size
    return sum(per_cell ** h for h in range(min_extension, horizon + 1))


def oracle_irrevocable(f: Formula, prefix: Trace, k: int, alphabet: typing.Iterable[str],
                       horizon: int, budget: int = DEFAULT_BUDGET, min_extension: int = 0) -> Irrevocability:
    """
    Checks whether the value of f at position 0 is already fixed by the
    first k cells of prefix.

    Every extension of those k cells by min_extension to horizon further
    cells, each cell any subset of alphabet, is evaluated with
    oracle_eval(). A monitor that decided at a cell it knew was not the
    last is checked with min_extension 1.

    :raises ValueError: k or horizon out of range.
    :raises BudgetExceededError: more than budget extensions would be
        enumerated.
    """
    if not 0 <= min_extension <= horizon:
        raise ValueError("need 0 <= min_extension <= horizon")
    if not 1 <= k <= len(prefix):
        raise ValueError("k must select between 1 and %d cells" % len(prefix))
    cells = subsets(alphabet)
    total = extension_count(len(set(alphabet)), horizon, min_extension)
    if total > budget:
        raise BudgetExceededError("%d extensions exceed the budget of %d" % (total, budget), budget)

    head = prefix.cells[:k]
    seen_true = seen_false = False
    for h in range(min_extension, horizon + 1):
        for tail in itertools.product(cells, repeat=h):
            if oracle_eval(f, Trace(head + tail), 0):
                seen_true = True
            else:
                seen_false = True
            if seen_true and seen_false:
                logger.debug("%s varies after %d cells", f, k)
                return Irrevocability.VARIES
    return Irrevocability.ALWAYS_TRUE if seen_true else Irrevocability.ALWAYS_FALSE
