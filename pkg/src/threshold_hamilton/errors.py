class ThresholdHamiltonError(Exception):
    """Base class for errors raised by this package."""


class UsageError(ThresholdHamiltonError, ValueError):
    """Bad argument: vertex out of range, edge not in the graph, and so on."""


class CapacityError(ThresholdHamiltonError):
    """The requested order exceeds a configured computation cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: order {n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class InvariantViolation(ThresholdHamiltonError, AssertionError):
    """An internal consistency check failed. Always a bug."""


class NotThresholdError(ThresholdHamiltonError, ValueError):
    pass


class FormatError(ThresholdHamiltonError, ValueError):
    """Malformed edge-list or creation-sequence input."""
