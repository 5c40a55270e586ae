"""Exception hierarchy shared by every module."""


class WeakCycleError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(WeakCycleError, ValueError):
    """A family, overlap or formula parameter is outside its valid range."""


class InvalidWordError(WeakCycleError, ValueError):
    """A symbol sequence is not a valid height word."""


class OutOfRange(InvalidWordError):
    pass


class GapError(InvalidWordError):
    pass


class MissingZero(GapError):
    pass


class RelationSyntaxError(WeakCycleError, ValueError):
    pass


class EmptyFamily(WeakCycleError, ValueError):
    pass


class OverlapTooLarge(ParameterError):
    pass


class LengthMismatch(WeakCycleError, ValueError):
    pass


class CycleNotFound(WeakCycleError):
    """The transition graph is not eulerian; ``diagnosis`` is JSON-ready."""

    def __init__(self, message, diagnosis):
        super().__init__(message)
        self.diagnosis = diagnosis


class NotBalanced(CycleNotFound):
    pass


class NotConnected(CycleNotFound):
    pass
