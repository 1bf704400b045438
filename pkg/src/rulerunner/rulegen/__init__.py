from rulerunner.rulegen.truth_value import TruthValue
from rulerunner.rulegen.qualifier import Qualifier, UNDECIDED_QUALIFIERS
from rulerunner.rulegen.state_atom import AtomKind, StateAtom, sort_key
from rulerunner.rulegen.rule import Rule, Stage
from rulerunner.rulegen.tables import TableCell, TableContext, Value, build_tables
from rulerunner.rulegen.rule_system import LeafActivation, ObligationSpec, RuleSystem, SweepGroup
from rulerunner.rulegen.initialise import (activation_set, grouped_rule_count_of, initialise, rule_count,
                                           rule_count_of)

# Largest number of clauses per node. An until owns 183 evaluation rules
# and 4 reactivation heads, a node is a head in at most three clauses of
# its ancestors (an always reactivates its operand from two triggers,
# then comes the nearest next) and the root of every system adds 9
# verdict rules.
RULES_PER_NODE_BOUND = 199

__all__ = [
    "TruthValue",
    "Qualifier",
    "UNDECIDED_QUALIFIERS",
    "AtomKind",
    "StateAtom",
    "sort_key",
    "Rule",
    "Stage",
    "TableCell",
    "TableContext",
    "Value",
    "build_tables",
    "LeafActivation",
    "ObligationSpec",
    "RuleSystem",
    "SweepGroup",
    "activation_set",
    "initialise",
    "rule_count",
    "rule_count_of",
    "grouped_rule_count_of",
    "RULES_PER_NODE_BOUND",
]
