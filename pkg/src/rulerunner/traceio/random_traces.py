import random
import typing

from rulerunner.oracle import Trace

Cell = typing.FrozenSet[str]

_CHUNK = 8


def _check(alphabet: typing.Sequence[str], n_cells: int, density: float):
    if not alphabet:
        raise ValueError("the alphabet is empty")
    if n_cells < 1:
        raise ValueError("a trace has at least one cell")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie between 0 and 1")


def _fair_cells(letters: typing.Sequence[str], rng: random.Random) -> typing.Callable[[], Cell]:
    # one random bit per letter; every byte of the draw selects a precomputed subset
    chunks = [letters[i:i + _CHUNK] for i in range(0, len(letters), _CHUNK)]
    tables = [[frozenset(c for j, c in enumerate(chunk) if bits >> j & 1) for bits in range(1 << len(chunk))]
              for chunk in chunks]
    mask = (1 << _CHUNK) - 1
    width = len(letters)

    def draw() -> Cell:
        bits = rng.getrandbits(width)
        return frozenset().union(*[table[bits >> (_CHUNK * k) & mask] for k, table in enumerate(tables)])

    return draw


def _biased_cells(letters: typing.Sequence[str], density: float, rng: random.Random) -> typing.Callable[[], Cell]:
    def draw() -> Cell:
        return frozenset(a for a in letters if rng.random() < density)

    return draw


def iter_random_cells(alphabet: typing.Iterable[str], n_cells: int, density: float = 0.5,
                      rng: random.Random = None) -> typing.Iterator[typing.Tuple[Cell, bool]]:
    """
    Yields n_cells random (cell, is_last) pairs without keeping them.
    Every observation of alphabet is present in a cell independently
    with probability density.
    """
    letters = sorted(set(alphabet))
    _check(letters, n_cells, density)
    rng = rng if rng is not None else random.Random()
    draw = _fair_cells(letters, rng) if density == 0.5 else _biased_cells(letters, density, rng)
    last = n_cells - 1
    for i in range(n_cells):
        yield draw(), i == last


def gen_random_trace(alphabet: typing.Iterable[str], n_cells: int, density: float = 0.5,
                     seed: typing.Optional[int] = None) -> Trace:
    """Returns a random trace; the same seed always gives the same trace."""
    cells = iter_random_cells(alphabet, n_cells, density, random.Random(seed))
    return Trace(tuple(cell for cell, _ in cells))
