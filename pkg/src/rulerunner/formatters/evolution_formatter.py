import typing

from rulerunner.common.color import Color
from rulerunner.common.events import CellEvent
from rulerunner.formatters.formatter import Formatter
from rulerunner.rulegen import AtomKind, RuleSystem, StateAtom, sort_key

_HIDDEN = (AtomKind.OBS_ABSENT, AtomKind.NOT_END, AtomKind.REPEAT)


class EvolutionFormatter(Formatter):
    """
    Renders the state evolution of one cell in four rows: the
    activations the cell starts with (state), the same plus the
    observations (+ obs), the atoms evaluation derived (eval) and the
    activations scheduled for the next cell (react). A cell that ended
    with a verdict gets a STOP row instead of react.

    Absence facts, !END and REPEAT are bookkeeping and not shown.
    """

    LABEL_WIDTH = 5

    def __init__(self, system: RuleSystem, color: bool = True):
        super().__init__()
        self.__describe = system.describe
        self.__color = color

    @property
    def color(self) -> bool:
        return self.__color

    def __atom(self, atom: StateAtom) -> str:
        kind = atom.kind
        if kind is AtomKind.OBS_PRESENT:
            return Color.CYAN.paint(atom.name, self.__color)
        text = atom.format(self.__describe)
        if kind is AtomKind.TRUTH or kind is AtomKind.OBLIGATION:
            color = {"T": Color.GREEN, "F": Color.RED}.get(atom.value.value, Color.YELLOW)
            return color.paint(text, self.__color)
        if kind in (AtomKind.SUCCESS, AtomKind.FAILURE):
            return (Color.GREEN if kind is AtomKind.SUCCESS else Color.RED).paint(text, self.__color)
        return text

    def __row(self, label: str, atoms: typing.Iterable[StateAtom], ordered: bool = False) -> str:
        shown = [a for a in atoms if a.kind not in _HIDDEN]
        if not ordered:
            shown.sort(key=sort_key)
        return "%s | %s" % (label.rjust(self.LABEL_WIDTH), ", ".join(self.__atom(a) for a in shown))

    def compile(self, event: CellEvent) -> int:
        derived = event.derived
        lines = [
            self.__row("state", event.state),
            self.__row("+ obs", event.observed),
            self.__row("eval", derived, ordered=True),
        ]
        kinds = {a.kind for a in derived}
        if AtomKind.SUCCESS in kinds:
            lines.append("%s | %s" % ("STOP".rjust(self.LABEL_WIDTH),
                                      Color.GREEN.paint("PROPERTY SATISFIED", self.__color)))
        elif AtomKind.FAILURE in kinds:
            lines.append("%s | %s" % ("STOP".rjust(self.LABEL_WIDTH),
                                      Color.RED.paint("PROPERTY VIOLATED", self.__color)))
        else:
            lines.append(self.__row("react", event.react))
        self._text = "\n".join(lines) + "\n\n"
        return len(self._text)
