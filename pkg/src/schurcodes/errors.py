"""Exception types shared across the package."""

from __future__ import annotations


class SchurCodesError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(SchurCodesError, ValueError):
    pass


class Reducible(SchurCodesError, ValueError):
    pass


class DegreeOutOfRange(SchurCodesError, ValueError):
    pass


class FieldMismatch(SchurCodesError, ValueError):
    pass


class DivisionByZero(SchurCodesError, ZeroDivisionError):
    pass


class SingularGram(SchurCodesError, ArithmeticError):
    """The trace Gram matrix of a basis was singular (cannot happen for a valid field)."""


class LengthMismatch(SchurCodesError, ValueError):
    pass


class TooLarge(SchurCodesError, RuntimeError):
    """An exhaustive enumeration would exceed the configured cap."""


class ZeroCode(SchurCodesError, ValueError):
    pass


class AlphabetMismatch(SchurCodesError, ValueError):
    pass


class UnsupportedMap(SchurCodesError, ValueError):
    pass


class BadBlock(SchurCodesError, ValueError):
    pass


class BadSpec(SchurCodesError, ValueError):
    pass


class HypothesisViolated(SchurCodesError, ValueError):
    pass


class RegimeInvalid(SchurCodesError, ValueError):
    pass


class CapExceeded(SchurCodesError, ValueError):
    pass
