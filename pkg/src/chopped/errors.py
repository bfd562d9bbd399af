"""Exception hierarchy shared by the whole package."""


class ChoppedError(Exception):
    """Base class for every error raised by :mod:`chopped`."""


class ParseError(ChoppedError, ValueError):
    pass


class CycleError(ChoppedError, ValueError):
    pass


class RedundantCoverError(ChoppedError, ValueError):
    pass


class IsolatedElementError(ChoppedError, ValueError):
    pass


class KeyMismatchError(ChoppedError, KeyError):
    def __str__(self):
        # KeyError quotes its argument; keep messages readable
        return str(self.args[0]) if self.args else ""


class IncompatibleVectorError(ChoppedError, ValueError):
    pass


class NotAnIdealError(ChoppedError, ValueError):
    pass


class NoUniqueMaximumError(ChoppedError, RuntimeError):
    pass


class InvariantViolation(ChoppedError, AssertionError):
    """A structural fact the construction guarantees did not hold."""


class DivergenceError(ChoppedError, RuntimeError):
    pass


class SizeLimitError(ChoppedError, RuntimeError):
    pass


class UnorderedPairError(IncompatibleVectorError):
    """Raised when ``u <= v`` fails for an input pair."""
