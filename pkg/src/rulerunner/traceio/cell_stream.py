import logging
import typing

from rulerunner.common.exceptions import TraceFormatError, UnterminatedTraceError
from rulerunner.traceio.trace_text import parse_cell

logger = logging.getLogger(__name__)


def stream_cells(lines: typing.Iterable[str]) -> typing.Iterator[typing.Tuple[typing.FrozenSet[str], bool]]:
    """
    Reads one cell per line and yields (cell, is_last) pairs, stopping
    after the line that carries END. Blank lines are skipped; a line
    reading just END is an empty last cell.

    Lines are pulled lazily, so the stream may be a pipe that is still
    being written.

    :raises TraceFormatError: a line is malformed; its line number is
        reported.
    :raises UnterminatedTraceError: the lines ran out before END.
    """
    count = 0
    for line_number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        if "-" in line:
            raise TraceFormatError("one cell per line expected", line_number, count)
        cell, has_end = parse_cell(line, line_number, count)
        count += 1
        yield cell, has_end
        if has_end:
            logger.debug("Cell stream ended after %d cells", count)
            return
    raise UnterminatedTraceError("input closed after %d cells without END" % count)
