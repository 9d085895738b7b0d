"""Exception hierarchy shared by every module of the package."""


class TotalVisError(Exception):
    """Base class for all errors raised by :mod:`totalvis`."""


class OutOfRangeVertex(TotalVisError, ValueError):
    pass


class SelfLoop(TotalVisError, ValueError):
    pass


class EdgeListSyntaxError(TotalVisError, ValueError):
    """Malformed edge-list text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DisconnectedGraph(TotalVisError, ValueError):
    pass


class Infeasible(TotalVisError):
    """The forced-in vertices do not form a total mutual-visibility set."""


class TooLarge(TotalVisError, ValueError):
    pass


class BadParameter(TotalVisError, ValueError):
    pass


class NotApplicable(TotalVisError):
    """A claim's hypothesis does not hold for the given input."""
