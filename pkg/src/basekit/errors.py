"""Exception types shared across the toolkit; the CLI maps them to exit codes."""


class BasekitError(Exception):
    """Base class for all toolkit errors."""


class ParseError(BasekitError):
    """Malformed cycle string, group file, or catalog spec."""


class HypothesisError(BasekitError):
    """A mathematical precondition of the requested operation does not hold."""


class BudgetError(BasekitError):
    """An enumeration or scan exceeded its configured budget."""

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial
