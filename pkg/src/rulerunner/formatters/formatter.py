import typing
from abc import ABC, abstractmethod


class Formatter(ABC):
    """
    Responsible for rendering an item and writing it to a text stream.

    Rendering can be done in a single step by calling format() or in two
    steps by calls to compile() and write(), which lets a caller inspect
    the size of the result before writing it.

    .. note::
        This class and subclasses thereof are not guaranteed to be threadsafe.
    """

    def __init__(self):
        self._text: typing.Optional[str] = None

    @abstractmethod
    def compile(self, item) -> int:
        """
        Renders an item and returns the length of the result.

        :param item: The item to render.
        :return: The number of characters the result holds.
        """
        pass

    def write(self, stream: typing.TextIO) -> None:
        """
        Writes a previously compiled item to the supplied stream. Nothing
        is written if compile() returned 0.

        :param stream: The stream to write to.
        """
        if self._text:
            stream.write(self._text)

    def format(self, item, stream: typing.TextIO) -> None:
        """
        Compiles an item and writes it to a stream.

        :param item: The item to render.
        :param stream: The stream to write to.
        """
        self.compile(item)
        self.write(stream)

    @property
    def text(self) -> str:
        """The result of the last compile() call."""
        return self._text or ""
