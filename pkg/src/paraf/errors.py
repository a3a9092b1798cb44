"""Exception hierarchy shared by every module."""


class ParafError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ParafError, ValueError):
    """Malformed framework, program, profile or query."""


class ParseError(InputError):
    """Text could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BindingError(ParafError, ValueError):
    """An argument set was used with a framework it does not belong to."""


class SizeError(ParafError, ValueError):
    """Instance exceeds the exhaustive-enumeration cap."""


class DispatchError(ParafError, ValueError):
    """A semantics was routed to a module that does not handle it."""


class PreconditionError(ParafError, ValueError):
    """Input program does not have the shape an operation requires."""
