"""Exception hierarchy shared by every module."""


class LDEError(Exception):
    """Base class for all errors raised by ldegeom."""


class ValidationError(LDEError, ValueError):
    """Input data does not describe a legal instance, solution or vector."""


class NonPositiveCoefficient(ValidationError):
    pass


class EmptySide(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class NotASolution(ValidationError):
    pass


class ZeroSolution(ValidationError):
    pass


class EmptySupport(ValidationError):
    pass


class InvalidCertificate(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class NotMinimal(LDEError):
    """The solution splits as a sum of two nonzero solutions."""


class SearchBudgetExceeded(LDEError):
    """An enumeration visited more nodes than the configured cap."""

    def __init__(self, cap, what="search"):
        self.cap = cap
        super().__init__(f"{what} exceeded the budget of {cap} explored nodes")


class InvariantViolation(LDEError, AssertionError):
    """An exact identity that must hold failed; this is a bug, not bad input."""
