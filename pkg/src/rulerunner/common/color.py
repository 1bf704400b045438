import os
import typing
from enum import Enum

COLOR_ENVIRONMENT_VARIABLE = "RR_COLOR"


class Color(Enum):
    """ANSI foreground colors used by the text renderers."""
    RED = 31
    GREEN = 32
    YELLOW = 33
    BLUE = 34
    CYAN = 36
    GRAY = 90
    # additional colors can be added, syntax is <<colorname>> = <<SGR code>>

    def paint(self, text: str, enabled: bool = True) -> str:
        """Wraps text in the escape sequences of this color when enabled."""
        if not enabled or not text:
            return text
        return "\033[%dm%s\033[0m" % (self.value, text)


def color_from_environment(environ: typing.Mapping[str, str] = None) -> typing.Optional[bool]:
    """
    Reads RR_COLOR: "0", "false", "no" or "off" disable colors, any other
    value enables them. Returns None when the variable is not set.
    """
    environ = os.environ if environ is None else environ
    value = environ.get(COLOR_ENVIRONMENT_VARIABLE)
    if value is None:
        return None
    return value.strip().lower() not in ("0", "false", "no", "off", "")
