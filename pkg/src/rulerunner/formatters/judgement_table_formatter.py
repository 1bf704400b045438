import typing

from rulerunner.common.color import Color
from rulerunner.formatters.formatter import Formatter
from rulerunner.mapsem import ChainRow
from rulerunner.rulegen import AtomKind, RuleSystem, sort_key


class JudgementTableFormatter(Formatter):
    """
    Renders a rewriting chain as a two column table, the state on the
    left and the judgement it maps to on the right, with a trailing ok or
    INVALID flag per row.
    """

    def __init__(self, system: RuleSystem, color: bool = True):
        super().__init__()
        self.__describe = system.describe
        self.__color = color

    def __state(self, row: ChainRow) -> str:
        shown = []
        for atom in sorted(row.atoms, key=sort_key):
            if atom.kind in (AtomKind.OBS_ABSENT, AtomKind.NOT_END, AtomKind.REPEAT):
                continue
            shown.append(atom.name if atom.kind is AtomKind.OBS_PRESENT else atom.format(self.__describe))
        return ", ".join(shown)

    def compile(self, rows: typing.Sequence[ChainRow]) -> int:
        states = [self.__state(r) for r in rows]
        width = max([len("State")] + [len(s) for s in states])
        lines = ["%s | %s" % ("State".ljust(width), "Judgement")]
        for row, state in zip(rows, states):
            flag = "ok" if row.valid else Color.RED.paint("INVALID", self.__color)
            lines.append("%s | %s  %s" % (state.ljust(width), row.judgement, flag))
        self._text = "\n".join(lines) + "\n"
        return len(self._text)
