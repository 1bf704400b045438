"""
Benchmark harness: compiles a property, monitors randomly generated
cells streamed one at a time and records how long it took.
"""
import logging
import random
import statistics
import string
import typing

from rulerunner.common.clock import Clock
from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.configuration import Configuration
from rulerunner.engine import Monitor, Verdict
from rulerunner.formula import compile_formula
from rulerunner.rulegen import initialise
from rulerunner.traceio import iter_random_cells

logger = logging.getLogger(__name__)

LATIN_ALPHABET = tuple(string.ascii_lowercase)

CSV_HEADER = ("formula", "n_cells", "rep", "compile_ms", "total_ms", "avg_ms_per_cell", "seed")


class BenchProperty(typing.NamedTuple):
    """
    A property to benchmark. Cells draw their observations from alphabet
    and always contain every name of required, which lets a property run
    to the end of the trace without an early verdict.
    """
    name: str
    text: str
    alphabet: typing.Tuple[str, ...]
    required: typing.FrozenSet[str] = frozenset()


def _latin_without(*excluded: str) -> typing.Tuple[str, ...]:
    return tuple(a for a in LATIN_ALPHABET if a not in excluded)


DEFAULT_PROPERTIES = (
    BenchProperty("phi1", "F a", _latin_without("a")),
    BenchProperty("phi2", "G ((a | b) | (c | d))", _latin_without("a"), frozenset(("a",))),
    BenchProperty("phi3", "F ((a & X b) | (c & W d))", _latin_without("a", "c")),
)


class BenchRecord(typing.NamedTuple):
    """
    The timing of one monitoring run. n_cells counts the cells actually
    monitored; total_ms includes compile_ms.
    """
    formula: str
    n_cells: int
    rep: int
    compile_ms: float
    total_ms: float
    avg_ms_per_cell: float
    seed: int


def load_properties(filename: str) -> typing.List[BenchProperty]:
    """
    Reads properties from a configuration file of ``name = formula``
    lines. Cells of each property use the Latin alphabet without the
    observations the formula mentions.

    :raises LoadConfigurationError: the file cannot be read.
    """
    config = Configuration()
    config.load_from_file(filename)
    properties = []
    for i in range(config.get_count()):
        name = config.read_key(i)
        text = config.read_string(name, "")
        atoms = compile_formula(text).atoms()
        properties.append(BenchProperty(name, text, _latin_without(*atoms)))
    return properties


def run_once(prop: BenchProperty, n_cells: int, rep: int, seed: int, density: float = 0.5,
             mode: EvaluationMode = EvaluationMode.FIXPOINT) -> BenchRecord:
    rng = random.Random(seed)
    start = Clock.now()
    system = initialise(compile_formula(prop.text))
    compile_ms = Clock.elapsed_ms(start)
    monitor = Monitor(system, mode)
    required = prop.required
    consumed = 0
    for cell, is_last in iter_random_cells(prop.alphabet, n_cells, density, rng):
        consumed += 1
        if isinstance(monitor.feed(cell | required if required else cell, is_last), Verdict):
            break
    total_ms = Clock.elapsed_ms(start)
    if consumed < n_cells:
        logger.debug("%s stopped after %d of %d cells", prop.name, consumed, n_cells)
    return BenchRecord(prop.name, consumed, rep, compile_ms, total_ms, total_ms / consumed, seed)


def run_bench(properties: typing.Sequence[BenchProperty], cell_counts: typing.Sequence[int], seed: int = 0,
              reps: int = 1, density: float = 0.5,
              mode: EvaluationMode = EvaluationMode.FIXPOINT) -> typing.List[BenchRecord]:
    """
    Monitors every property over random traces of every length in
    cell_counts, reps times each. Repetition r uses the seed seed + r, so
    runs are reproducible. Cells are generated while monitoring, so memory
    does not depend on the trace length.

    :raises ValueError: a cell count is below 1 or reps is below 1.
    """
    if reps < 1:
        raise ValueError("reps must be at least 1")
    if any(n < 1 for n in cell_counts):
        raise ValueError("cell counts must be at least 1")
    records = []
    for prop in properties:
        for n in cell_counts:
            for rep in range(reps):
                record = run_once(prop, n, rep, seed + rep, density, mode)
                logger.debug("%s n=%d rep=%d: %.3f ms", prop.name, record.n_cells, rep, record.total_ms)
                records.append(record)
    return records


class LinearFit(typing.NamedTuple):
    slope: float
    intercept: float
    r_squared: float


def fit_linear(xs: typing.Sequence[float], ys: typing.Sequence[float]) -> LinearFit:
    """
    Fits ys = slope * xs + intercept by least squares and reports the
    coefficient of determination.

    :raises ValueError: fewer than two points, or all xs equal.
    """
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least two (x, y) pairs")
    try:
        slope, intercept = statistics.linear_regression(xs, ys)
    except statistics.StatisticsError as e:
        raise ValueError(str(e)) from e
    if len(set(ys)) == 1:
        return LinearFit(slope, intercept, 1.0)
    r = statistics.correlation(xs, ys)
    return LinearFit(slope, intercept, r * r)


def summarize(records: typing.Iterable[BenchRecord]) -> typing.Dict[str, LinearFit]:
    """Fits total_ms against n_cells per formula; formulas with a single length are left out."""
    by_formula: typing.Dict[str, typing.List[BenchRecord]] = {}
    for record in records:
        by_formula.setdefault(record.formula, []).append(record)
    fits = {}
    for name, group in by_formula.items():
        if len({r.n_cells for r in group}) > 1:
            fits[name] = fit_linear([r.n_cells for r in group], [r.total_ms for r in group])
    return fits
