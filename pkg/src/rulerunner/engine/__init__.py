from rulerunner.engine.phase import Phase
from rulerunner.engine.verdict import MonitorResult, Outcome, Pending, Verdict
from rulerunner.engine.monitor_state import MonitorState
from rulerunner.engine.obligation import Obligation
from rulerunner.engine.chaining import (evaluate_fixpoint, evaluate_single_pass, fc_step, ingest_cell,
                                        initial_state, react, run_instance)
from rulerunner.engine.monitor import CellSource, Monitor, monitor_stream, monitor_trace

__all__ = [
    "Phase",
    "MonitorResult",
    "Outcome",
    "Pending",
    "Verdict",
    "MonitorState",
    "Obligation",
    "evaluate_fixpoint",
    "evaluate_single_pass",
    "fc_step",
    "ingest_cell",
    "initial_state",
    "react",
    "run_instance",
    "CellSource",
    "Monitor",
    "monitor_stream",
    "monitor_trace",
]
