"""
The text form of traces: cells are separated by dashes and observations
within a cell by commas, as in ``c - a - b,d - b,END``. An empty cell is
written ``_``. END may close the last cell and is never an observation.
"""
import typing

from rulerunner.common.exceptions import TraceFormatError
from rulerunner.oracle import Trace
from rulerunner.oracle.trace import OBSERVATION_NAME

CELL_SEPARATOR = "-"
OBSERVATION_SEPARATOR = ","
EMPTY_CELL = "_"
END_TOKEN = "END"


def parse_cell(text: str, line_number: int = 0, position: int = 0) -> typing.Tuple[typing.FrozenSet[str], bool]:
    """
    Parses the text of one cell and returns its observations together
    with whether the cell carries the END token.

    Duplicate observations are accepted and collapse into one.

    :raises TraceFormatError: the cell has an empty token, an invalid
        name, or ``_`` next to observations.
    """
    names = set()
    has_end = False
    has_empty = False
    for token in (t.strip() for t in text.split(OBSERVATION_SEPARATOR)):
        if not token:
            raise TraceFormatError("empty observation in %r; write an empty cell as %s"
                                   % (text.strip(), EMPTY_CELL), line_number, position)
        if token == END_TOKEN:
            if has_end:
                raise TraceFormatError("END given twice", line_number, position)
            has_end = True
        elif token == EMPTY_CELL:
            has_empty = True
        elif token == "true" or not OBSERVATION_NAME.match(token):
            raise TraceFormatError("invalid observation name %r" % token, line_number, position)
        else:
            names.add(token)
    if has_empty and names:
        raise TraceFormatError("%s marks an empty cell but the cell has observations" % EMPTY_CELL,
                               line_number, position)
    return frozenset(names), has_end


def parse_trace(text: str) -> Trace:
    """
    Parses a trace text.

    :raises TraceFormatError: the text is empty, a cell is malformed or
        END closes a cell other than the last.
    """
    if not text or not text.strip():
        raise TraceFormatError("empty trace")
    pieces = text.split(CELL_SEPARATOR)
    cells = []
    for position, piece in enumerate(pieces):
        cell, has_end = parse_cell(piece, 0, position)
        if has_end and position != len(pieces) - 1:
            raise TraceFormatError("END in a cell that is not the last", 0, position)
        cells.append(cell)
    return Trace(tuple(cells))


def format_cell(cell: typing.AbstractSet[str], is_last: bool = False) -> str:
    names = sorted(cell)
    if is_last:
        names.append(END_TOKEN)
    return OBSERVATION_SEPARATOR.join(names) if names else EMPTY_CELL


def serialize_trace(t: Trace) -> str:
    """Returns the text of a trace; the last cell always carries END."""
    last = len(t) - 1
    return (" %s " % CELL_SEPARATOR).join(format_cell(cell, i == last) for i, cell in enumerate(t.cells))
