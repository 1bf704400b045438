import time


class Clock:
    """
    Monotonic wall clock used for benchmark timings.
    """

    @staticmethod
    def now() -> int:
        """Returns a monotonic timestamp in nanoseconds."""
        return time.perf_counter_ns()

    @staticmethod
    def elapsed_ms(start: int) -> float:
        """Returns the milliseconds elapsed since a timestamp taken with now()."""
        return (time.perf_counter_ns() - start) / 1e6
