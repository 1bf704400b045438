class VerdictEvent:
    """
    This class is used by the MonitorListener.on_verdict event of the
    Monitor class. Its verdict property returns the verdict reached.
    """

    def __init__(self, source: object, verdict):
        """Initializes a VerdictEvent instance.

        :param source: the monitor which fired the event.
        :param verdict: the Verdict reached.
        """
        if source is None:
            raise ValueError("Source is None")
        self.__source = source
        self.__verdict = verdict

    @property
    def source(self):
        return self.__source

    @property
    def verdict(self):
        return self.__verdict
