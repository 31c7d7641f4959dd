"""Exception hierarchy shared by the library and the command line."""


class MimsolveError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MimsolveError, ValueError):
    """Malformed or inconsistent user input."""


class ParseError(InputError):
    """A text file could not be parsed."""


class WidthError(InputError):
    """A layout does not meet the required mim-width bound."""

    def __init__(self, message: str, node: int | None = None):
        super().__init__(message)
        self.node = node


class ContractError(MimsolveError, ValueError):
    """A function was called on an argument violating its precondition."""


class PreconditionError(MimsolveError, ValueError):
    """A structural requirement of a construction is not met."""


class SizeError(MimsolveError, ValueError):
    """An exhaustive routine was asked to work beyond its size guard."""


class InvariantError(MimsolveError, RuntimeError):
    """An internal consistency check failed."""
