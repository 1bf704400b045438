import logging
import typing

from rulerunner.common.evaluation_mode import EvaluationMode

logger = logging.getLogger(__name__)


class LookupTable:
    """
    Represents a simple collection of key/value pairs.

    The LookupTable class is responsible for storing and returning
    values which are organized by keys. Values can be added with
    the put() method. To query a string value for a given key, the
    get_string_value() method can be used. To query and automatically
    convert values to types other than string, please have a look
    at the get method family.

    Keys are case-insensitive.

    .. note::
        This class is not guaranteed to be threadsafe.
    """

    def __init__(self):
        """
        Initializes a LookupTable instance.
        """
        self.__items = dict()

    def put(self, key: str, value: str) -> None:
        """
        Adds or updates an element with a specified key and value.
        If an element for the given key already exists, the original
        element's value is updated.

        :param key: The key of the element.
        :param value: The value of the element.
        """
        if self.__key_is_valid(key) and self.__value_is_valid(value):
            self.__items[key.lower()] = value

    @staticmethod
    def __value_is_valid(value: str) -> bool:
        if not isinstance(value, str):
            raise TypeError("value must be a string")
        return True

    @staticmethod
    def __key_is_valid(key: str) -> bool:
        if not isinstance(key, str):
            raise TypeError("key must be a string")
        return True

    def add(self, key: str, value: str) -> None:
        """
        Adds a new element with a specified key and value. If an element
        for the given key already exists, its value is not updated.

        :param key: The key of the element.
        :param value: The value of the element.
        """
        if self.__key_is_valid(key) and self.__value_is_valid(value):
            if not self.contains(key):
                self.put(key, value)

    def remove(self, key: str) -> None:
        """
        Removes the element with the given key. Nothing happens if no
        element with the given key exists.
        """
        if self.__key_is_valid(key):
            self.__items.pop(key.lower(), None)

    def contains(self, key: str) -> bool:
        """
        Tests if the collection contains a value for a given key.

        :param key: The key to test for.
        :return: True if a value exists for the given key and False otherwise.
        """
        if self.__key_is_valid(key):
            return key.lower() in self.__items
        return False

    def clear(self) -> None:
        """
        Removes all key/value pairs of the collection.
        """
        self.__items.clear()

    def get_count(self) -> int:
        """
        Returns the number of key/value pairs of this collection.
        """
        return len(self.__items)

    def get_string_value(self, key: str, default_value: typing.Optional[str]) -> typing.Optional[str]:
        """
        Returns the value of an element for a given key.

        :param key: The key whose value to return.
        :param default_value: The value to return if the given key is unknown.
        :return: Either the value for the given key or default_value.
        """
        if self.__key_is_valid(key):
            return self.__items.get(key.lower(), default_value)
        return default_value

    def get_integer_value(self, key: str, default_value: int) -> int:
        """
        Returns the value of an element converted to an integer.

        The default_value is returned if the key is unknown or the value is
        not a valid integer. Scientific notation with an integral result
        ("1e5") is accepted.
        """
        value = self.get_string_value(key, "")
        if value:
            converted = self.to_integer(value)
            if converted is not None:
                return converted
            logger.debug("Ignoring non-integer value %r for key %r", value, key)
        return default_value

    def get_float_value(self, key: str, default_value: float) -> float:
        """
        Returns the value of an element converted to a float, or
        default_value if the key is unknown or the value is not a number.
        """
        value = self.get_string_value(key, "")
        if value:
            try:
                return float(value.strip())
            except ValueError:
                logger.debug("Ignoring non-numeric value %r for key %r", value, key)
        return default_value

    def get_boolean_value(self, key: str, default_value: bool) -> bool:
        """
        Returns True if the value of the given key matches either "true",
        "1" or "yes" and False otherwise. If the supplied key is unknown,
        default_value is returned.
        """
        value = self.get_string_value(key, "")
        if value:
            return value.lower().strip() in ("true", "1", "yes")
        return default_value

    def get_integer_list_value(self, key: str, default_value: typing.List[int]) -> typing.List[int]:
        """
        Returns a comma-separated list of integers, such as "1e3,1e4,1e5".
        The default_value is returned if the key is unknown or any item is
        not a valid integer.
        """
        value = self.get_string_value(key, "")
        if not value:
            return default_value
        result = self.to_integer_list(value)
        if result is None:
            logger.debug("Ignoring malformed integer list %r for key %r", value, key)
            return default_value
        return result

    def get_mode_value(self, key: str, default_value: EvaluationMode) -> EvaluationMode:
        """
        Returns the value of an element converted to an EvaluationMode, or
        default_value if the key is unknown or names no mode.
        """
        if not isinstance(default_value, EvaluationMode):
            raise TypeError("default_value must be an EvaluationMode")
        value = self.get_string_value(key, "")
        if value:
            try:
                return EvaluationMode.parse(value)
            except ValueError:
                logger.debug("Ignoring unknown mode %r for key %r", value, key)
        return default_value

    @staticmethod
    def to_integer(value: str) -> typing.Optional[int]:
        """
        Converts "42" or "1e6" to an int. Returns None for anything else,
        including negative numbers and non-integral values.
        """
        value = value.strip()
        try:
            return int(value) if int(value) >= 0 else None
        except ValueError:
            pass
        try:
            number = float(value)
        except ValueError:
            return None
        if number < 0 or not number.is_integer():
            return None
        return int(number)

    @classmethod
    def to_integer_list(cls, value: str) -> typing.Optional[typing.List[int]]:
        items = [item for item in value.split(",") if item.strip()]
        result = [cls.to_integer(item) for item in items]
        if not result or any(item is None for item in result):
            return None
        return result
