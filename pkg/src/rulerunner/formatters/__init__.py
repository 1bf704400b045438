from rulerunner.formatters.formatter import Formatter
from rulerunner.formatters.rule_system_formatter import RuleSystemFormatter
from rulerunner.formatters.evolution_formatter import EvolutionFormatter
from rulerunner.formatters.judgement_table_formatter import JudgementTableFormatter
from rulerunner.formatters.bench_csv_formatter import BenchCsvFormatter

__all__ = [
    "Formatter",
    "RuleSystemFormatter",
    "EvolutionFormatter",
    "JudgementTableFormatter",
    "BenchCsvFormatter",
]
