"""Shared exception types."""


class GraphFormatError(ValueError):
    """Malformed or invalid edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NonNormalGraphError(RuntimeError):
    """An operation that needs a normal semigroup ring got a graph whose
    ring is not normal."""


class DegenerateConeError(RuntimeError):
    """The generators do not span a full-dimensional cone; for graph input
    this indicates an internal invariant violation."""


class InvariantViolationError(RuntimeError):
    """A structural fact that should hold unconditionally failed; this is a
    bug, not a property of the input."""


class OmegaBoundError(RuntimeError):
    """No nonzero graded piece of the canonical module was found below the
    configured t-degree cap."""
