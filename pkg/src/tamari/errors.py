"""Exception types shared across the package."""


class TamariError(Exception):
    """Base class for all errors raised by this package."""


class DegreeError(TamariError, ValueError):
    """A degree is out of range or two degrees that must agree do not."""


class InternalInvariantError(TamariError, RuntimeError):
    """A structural fact the library relies on failed to hold.

    This signals a bug (or a broken convention probe), never bad user input.
    """
