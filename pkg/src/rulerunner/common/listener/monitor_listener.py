from abc import ABC, abstractmethod

from rulerunner.common.events import CellEvent, VerdictEvent


class MonitorListener(ABC):
    """
    This listener interface is used by the Monitor class to report the
    evolution of its state. Handlers are called in the context of the
    thread that feeds the monitor.
    """

    @abstractmethod
    def on_cell(self, event: CellEvent):
        """
        Occurs after a cell has been processed, whether or not it ended
        with a verdict.

        Example:
        -------
        class Listener(MonitorListener):
            def on_cell(self, e: CellEvent):
                print(e.cell_index, len(e.derived))

            def on_verdict(self, e: VerdictEvent):
                pass

        monitor.add_listener(Listener())

        :param event: The event argument for the event handlers
        """
        ...

    @abstractmethod
    def on_verdict(self, event: VerdictEvent):
        """
        Occurs once, after the cell that produced the verdict.

        :param event: The event argument for the event handlers
        """
        ...
