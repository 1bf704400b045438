from rulerunner.traceio.trace_text import format_cell, parse_cell, parse_trace, serialize_trace
from rulerunner.traceio.cell_stream import stream_cells
from rulerunner.traceio.random_traces import gen_random_trace, iter_random_cells

__all__ = [
    "format_cell",
    "parse_cell",
    "parse_trace",
    "serialize_trace",
    "stream_cells",
    "gen_random_trace",
    "iter_random_cells",
]
