from rulerunner.common.events.cell_event import CellEvent
from rulerunner.common.events.verdict_event import VerdictEvent

__all__ = [
    "CellEvent",
    "VerdictEvent",
]
