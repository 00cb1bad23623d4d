"""Exception hierarchy shared by the library and the CLI."""


class PartCountError(Exception):
    """Base class for every error raised by partcount."""


class DomainError(PartCountError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedSizeError(PartCountError, ValueError):
    """A test-only routine was asked for a size beyond its window."""


class InconsistencyError(PartCountError, ArithmeticError):
    """An internal invariant failed, e.g. a division that must be exact was not.

    This always signals a bug, never bad user input.
    """
