"""Exception hierarchy shared by the library and the command-line frontend."""


class FlagLCTError(Exception):
    """Base class for all errors raised by :mod:`flaglct`."""


class DomainError(FlagLCTError, ValueError):
    """Input is well formed but mathematically invalid (bad node, negative coefficient, ...)."""


class ParseError(FlagLCTError, ValueError):
    """Input text could not be parsed.

    ``position`` is the 0-based character offset of the offending token when known.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class CapExceeded(FlagLCTError, RuntimeError):
    """An enumeration would exceed the configured element cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"cap exceeded: {what} has {size} elements, cap is {cap}")
