"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for errors raised by this package."""


class UsageError(ToolkitError, ValueError):
    """Caller mixed fields, passed malformed values, or broke a documented contract."""


class PreconditionError(UsageError):
    """An operation was refused because a named precondition does not hold."""

    def __init__(self, precondition, message=None):
        self.precondition = precondition
        super().__init__(message or f"precondition not satisfied: {precondition}")


class UnsupportedOperationError(ToolkitError):
    """The operation is not supported for this input (e.g. enumeration over Q)."""


class BudgetExceededError(UnsupportedOperationError):
    """An enumeration would exceed the configured budget; failing loudly instead."""


class TheoremViolationError(ToolkitError):
    """A decomposition guaranteed by theory could not be built.

    Indicates an implementation bug or a genuine counterexample; never
    swallowed silently.
    """

    def __init__(self, message, details=None):
        self.details = details if details is not None else {}
        super().__init__(message)


class AlgebraFileError(UsageError):
    """A structure-constant file failed to parse or validate."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)
