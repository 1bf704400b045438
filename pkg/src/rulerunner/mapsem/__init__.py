from rulerunner.mapsem.judgement import BOTTOM, TOP, FltlJudgement, Join, Judge, Meet
from rulerunner.mapsem.map_state import UntilBlockMapping, map_state
from rulerunner.mapsem.rewriting_chain import (ChainRow, chain_formula, chain_system, check_rewriting_chain,
                                              is_rewriting_step)

__all__ = [
    "BOTTOM",
    "TOP",
    "FltlJudgement",
    "Join",
    "Judge",
    "Meet",
    "UntilBlockMapping",
    "map_state",
    "ChainRow",
    "chain_formula",
    "chain_system",
    "check_rewriting_chain",
    "is_rewriting_step",
]
