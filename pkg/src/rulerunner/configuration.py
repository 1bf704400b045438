import logging
import typing

from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.exceptions import LoadConfigurationError
from rulerunner.common.lookup_table import LookupTable

logger = logging.getLogger(__name__)


class Configuration:
    """
    Responsible for loading RuleRunner settings from a file and reading
    typed values from them.

    A configuration file holds key/value pairs separated by a '='
    character. Empty or unrecognized lines and lines beginning with a ';'
    character are ignored. Keys are case-insensitive. An example::

        ; monitor defaults
        mode = singlepass
        color = no
        cells = 1e3, 1e4, 1e5
        reps = 3

    .. note::
     This class is not guaranteed to be thread-safe.
    """

    def __init__(self):
        """
        Initializes a new, empty Configuration instance.
        """
        self.__keys: list = list()
        self.__items: LookupTable = LookupTable()

    def load_from_file(self, filename: str) -> None:
        """
        Loads the configuration from a file, replacing any previous content.

        :param filename: The name of the file to load the configuration from.
        :raise TypeError: filename is not str type.
        :raise LoadConfigurationError: the file does not exist or cannot be read.
        """
        if not isinstance(filename, str):
            raise TypeError("filename must be a string")

        self.clear()
        try:
            with open(filename, "r", encoding="utf-8-sig") as file:
                content = file.read().splitlines()
        except OSError as e:
            raise LoadConfigurationError(filename, e)

        for line in content:
            if not line.lstrip().startswith(";"):
                self.__parse(line)
        logger.debug("Loaded %d configuration keys from %s", self.get_count(), filename)

    def load_from_text(self, text: str) -> None:
        """
        Loads the configuration from a string with the same syntax as a
        configuration file.
        """
        if not isinstance(text, str):
            raise TypeError("text must be a string")
        self.clear()
        for line in text.splitlines():
            if not line.lstrip().startswith(";"):
                self.__parse(line)

    def __parse(self, line: str) -> None:
        idx = line.find("=")

        if idx != -1:
            key = line[:idx].strip()
            value = line[idx + 1:].strip()
            if not key:
                return

            if not self.__items.contains(key):
                self.__keys.append(key)

            self.__items.put(key, value)

    def clear(self) -> None:
        """
        Removes all key/value pairs of the configuration.
        """
        self.__keys.clear()
        self.__items.clear()

    def contains(self, key: str) -> bool:
        """
        Tests if the configuration contains a value for a given key.
        """
        return self.__items.contains(key)

    def get_count(self) -> int:
        """
        Returns the number of key/value pairs of this configuration.
        """
        return self.__items.get_count()

    def read_key(self, idx: int) -> str:
        """
        Returns the key at a given index, in the order the keys first
        appeared. Use get_count() for the number of keys and read_string()
        for the value of a key.
        """
        return self.__keys[idx]

    def read_string(self, key: str, default_value: typing.Optional[str]) -> typing.Optional[str]:
        return self.__items.get_string_value(key, default_value)

    def read_boolean(self, key: str, default_value: bool) -> bool:
        """
        Returns True if the value of the key is "true", "1" or "yes",
        False for any other value and default_value if the key is unknown.
        """
        return self.__items.get_boolean_value(key, default_value)

    def read_integer(self, key: str, default_value: int) -> int:
        """
        Returns the value of the key as a non-negative int, or
        default_value if the key is unknown or the value is not valid.
        """
        return self.__items.get_integer_value(key, default_value)

    def read_float(self, key: str, default_value: float) -> float:
        return self.__items.get_float_value(key, default_value)

    def read_integer_list(self, key: str, default_value: typing.List[int]) -> typing.List[int]:
        """
        Returns the value of the key as a list of ints ("1e3,1e4"), or
        default_value if the key is unknown or the list is malformed.
        """
        return self.__items.get_integer_list_value(key, default_value)

    def read_mode(self, key: str, default_value: EvaluationMode) -> EvaluationMode:
        """
        Returns the value of the key as an EvaluationMode, or
        default_value if the key is unknown or names no mode.
        """
        return self.__items.get_mode_value(key, default_value)
