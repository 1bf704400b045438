class RuleRunnerError(Exception):
    """
    Used to report any kind of error raised by the RuleRunner library.

    This is the base class for the more specific exceptions below. Several
    of them carry additional information besides the message, like the
    position of a syntax error in a formula or the index of the cell in
    which a streamed trace failed. The command line surface catches this
    class and turns it into exit code 2.

    .. note::
        This class is not guaranteed to be threadsafe.
    """

    def __init__(self, message: str):
        """
        Initializes a RuleRunnerError exception instance with a custom
        error message.

        :param message: The error message which describes this exception.
        """
        super().__init__(message)

    @property
    def message(self) -> str:
        """
        The error message which describes this exception.
        """
        return self.args[0]


class FormulaSyntaxError(RuleRunnerError):
    """
    Reports a formula text that cannot be parsed.

    The position property holds the zero-based character offset at which
    the parser gave up. Unbalanced parentheses are reported with the
    offset of the offending parenthesis.
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        if not isinstance(position, int):
            raise TypeError("position must be an int")
        self.__position = position

    @property
    def position(self) -> int:
        """The zero-based offset of the error in the formula text."""
        return self.__position

    def __str__(self) -> str:
        return "%s (at position %d)" % (self.message, self.__position)


class NormalFormError(RuleRunnerError):
    """
    Reports a negation that has no negation normal form in the formula
    grammar, such as a negated until, a negated true or a negated END.
    """


class UnknownOperatorError(RuleRunnerError):
    """Reports an operator kind the rule compiler has no table for."""


class TraceFormatError(RuleRunnerError):
    """
    Reports a malformed trace text or a malformed line of a cell stream.

    line_number is 1-based and 0 when the trace was given as a single
    string; position is the 0-based offset of the offending cell.
    """

    def __init__(self, message: str, line_number: int = 0, position: int = 0):
        super().__init__(message)
        self.__line_number = line_number
        self.__position = position

    def get_line_number(self) -> int:
        """
        Returns the 1-based line number of the malformed line, or 0 if
        the trace was not read line by line.
        """
        return self.__line_number

    def get_position(self) -> int:
        """
        Returns the 0-based index of the malformed cell.
        """
        return self.__position

    def __str__(self) -> str:
        if self.__line_number:
            return "line %d: %s" % (self.__line_number, self.message)
        return "cell %d: %s" % (self.__position + 1, self.message)


class UnterminatedTraceError(RuleRunnerError):
    """Reports a cell stream that was closed before its END marker."""


class MonitorPhaseError(RuleRunnerError):
    """Reports an engine operation called in the wrong monitor phase."""


class NoVerdictError(RuleRunnerError):
    """
    Reports a last cell that was evaluated without deriving SUCCESS or
    FAILURE. Generated rule systems never do this; a hand-edited or
    corrupted one may.
    """


class ConflictingVerdictError(RuleRunnerError):
    """Reports a cell in which both SUCCESS and FAILURE were derived."""


class StreamError(RuleRunnerError):
    """
    Wraps a failure of a cell provider together with the 1-based index of
    the cell that was being requested.
    """

    def __init__(self, message: str, cell_index: int, cause: Exception = None):
        super().__init__(message)
        self.__cell_index = cell_index
        self.__cause = cause

    @property
    def cell_index(self) -> int:
        """The 1-based index of the cell that could not be read."""
        return self.__cell_index

    @property
    def cause(self) -> Exception:
        """The exception raised by the provider, if any."""
        return self.__cause


class BudgetExceededError(RuleRunnerError):
    """
    Reports an enumeration that would exceed its combinatorial budget.

    The limit property holds the budget which was in effect.
    """

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.__limit = limit

    @property
    def limit(self) -> int:
        return self.__limit


class MapError(RuleRunnerError):
    """
    Reports a monitor state that cannot be translated into a judgement,
    either because it does not belong to the formula or because it
    reaches an eventually or always node.
    """


class LoadConfigurationError(RuleRunnerError):
    """
    Used to report errors concerning the loading of a configuration file.

    Besides the message, this exception carries the name of the file that
    could not be read and the underlying exception, which is usually an
    OSError.
    """

    def __init__(self, filename: str, exception: Exception):
        super().__init__("Could not load configuration from '%s': %s" % (filename, exception))
        self.__filename = filename
        self.__exception = exception

    def get_filename(self) -> str:
        """
        Returns the name of the configuration file which caused this
        exception.
        """
        return self.__filename

    def get_exception(self) -> Exception:
        """
        Returns the exception which was raised while reading the file.
        """
        return self.__exception
