"""Exception types shared across the package."""


class KdomError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(KdomError, IndexError):
    """A vertex index falls outside [0, n)."""


class SimplenessViolation(KdomError, ValueError):
    """Strict construction rejected a self-loop or duplicate edge."""


class TooLarge(KdomError, ValueError):
    """Instance exceeds the size cap of an exhaustive operation."""


class DisconnectedInput(KdomError, ValueError):
    """Operation requires a connected graph."""


class InvalidOrder(KdomError, ValueError):
    """Requested graph order is outside the family's valid range."""


class EmptyFactor(KdomError, ValueError):
    """Product of graphs requires both factors to be non-empty."""


class PreconditionViolated(KdomError, ValueError):
    """Caller-supplied data does not satisfy an operation's precondition."""


class BudgetExceeded(KdomError, RuntimeError):
    """An embedded exact solve did not finish within its search budget."""


class ParseError(KdomError, ValueError):
    """Malformed edge-list text; carries the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class CountMismatch(ParseError):
    """Declared edge count does not match the number of edge lines."""


class InfiniteDiameter(KdomError, ValueError):
    """Diameter-based bound is undefined for disconnected graphs."""


class InfiniteRadius(KdomError, ValueError):
    """Radius-based bound is undefined for disconnected graphs."""
