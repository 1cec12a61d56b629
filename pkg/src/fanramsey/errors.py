"""Exception hierarchy shared by every module of the package."""


class RamseyError(Exception):
    """Base class for all package errors."""


class OutOfRange(RamseyError, ValueError):
    pass


class SelfLoop(RamseyError, ValueError):
    pass


class EmptySet(RamseyError, ValueError):
    pass


class BadParams(RamseyError, ValueError):
    pass


class PatternTooLarge(RamseyError):
    """The pattern has more vertices than the coloring, so it cannot occur.

    Raised instead of silently returning ``None`` so callers can tell an
    impossible query apart from a genuine negative answer.
    """


class Infeasible(RamseyError, ValueError):
    pass


class ParityError(RamseyError, ValueError):
    pass


class BudgetExceeded(RamseyError):
    """The time budget ran out; ``partial`` holds whatever was completed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DecodeError(RamseyError, ValueError):
    """Base class for certificate parsing failures."""

    def __init__(self, message, line=None, col=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {col}" if col is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col


class BadMagic(DecodeError):
    pass


class BadN(DecodeError):
    pass


class BadRowLength(DecodeError):
    pass


class BadChar(DecodeError):
    pass
