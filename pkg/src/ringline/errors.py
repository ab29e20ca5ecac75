"""Exception types shared across the package."""


class RinglineError(Exception):
    """Base class for all errors raised by ringline."""


class RingSpecError(RinglineError, ValueError):
    """A ring expression could not be parsed.

    ``position`` is the 0-based offset into the stripped expression where
    the problem was detected, or ``None`` when it applies to the whole text.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class UnsupportedRingError(RingSpecError):
    """The expression is well formed but names a ring we cannot build."""


class CapExceededError(RinglineError):
    """A construction or enumeration would exceed a configured size cap."""


class BudgetExceededError(RinglineError):
    """A combinatorial search ran past its node budget."""

    def __init__(self, message, nodes=None):
        self.nodes = nodes
        super().__init__(message)


class RingMismatchError(RinglineError, ValueError):
    """Two objects that must live over the same ring do not."""


class FixtureError(RinglineError, ValueError):
    """A parallelism fixture document is malformed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class GroupGenerationError(RinglineError):
    """Chosen generators do not produce the full linear group."""
