import csv
import io
import typing

from rulerunner.bench import CSV_HEADER, BenchRecord
from rulerunner.formatters.formatter import Formatter


class BenchCsvFormatter(Formatter):
    """
    Renders benchmark records as CSV with the header
    ``formula,n_cells,rep,compile_ms,total_ms,avg_ms_per_cell,seed``.
    Times are printed in milliseconds with microsecond precision.
    """

    def __init__(self, header: bool = True):
        super().__init__()
        self.__header = header

    def compile(self, records: typing.Iterable[BenchRecord]) -> int:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.__header:
            writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow((r.formula, r.n_cells, r.rep, "%.3f" % r.compile_ms, "%.3f" % r.total_ms,
                             "%.6f" % r.avg_ms_per_cell, r.seed))
        self._text = buffer.getvalue()
        return len(self._text)
