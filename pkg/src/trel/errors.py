"""Exception types shared across the package."""


class TrelError(Exception):
    """Base class for errors raised by this package."""


class ParseError(TrelError):
    """Input text that does not match the formula or assignment grammar."""

    def __init__(self, message: str, span=None):
        super().__init__(message)
        self.message = message
        self.span = span


class MissingVariableError(TrelError):
    """An assignment lacks a value for a variable the operation needs."""


class CapExceededError(TrelError):
    """An enumeration would exceed the configured variable cap."""


class NodeBudgetError(TrelError):
    """Tableau construction would exceed the configured node budget."""
