from rulerunner.oracle.trace import Trace
from rulerunner.oracle.irrevocability import Irrevocability
from rulerunner.oracle.oracle import oracle_eval, oracle_irrevocable, subsets, extension_count
