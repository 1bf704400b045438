from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.exceptions import (RuleRunnerError, FormulaSyntaxError, NormalFormError, UnknownOperatorError,
                                          TraceFormatError, UnterminatedTraceError, MonitorPhaseError, NoVerdictError,
                                          ConflictingVerdictError, StreamError, BudgetExceededError, MapError,
                                          LoadConfigurationError)
from rulerunner.configuration import Configuration
from rulerunner.formula import Formula, FormulaKind, compile_formula, parse_formula, print_formula
from rulerunner.oracle import Trace, oracle_eval, oracle_irrevocable
from rulerunner.rulegen import RuleSystem, initialise, rule_count
from rulerunner.engine import Monitor, Outcome, Pending, Verdict, monitor_stream, monitor_trace
from rulerunner.traceio import parse_trace, serialize_trace, stream_cells

__version__ = "1.0.0"
