"""Exception types raised by the library.

The class names double as the error names the command line reports, so they
are part of the public surface.
"""


class QsoaError(Exception):
    """Base class for domain errors."""


class ZeroArgument(QsoaError, ZeroDivisionError):
    pass


class NonzeroConstantTerm(QsoaError):
    pass


class IdenticallyZero(QsoaError):
    pass


class StepLimitExceeded(QsoaError):
    pass


class DenominatorVanishes(QsoaError):
    """A bracket in a denominator is zero; ``which`` names it."""

    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class ZeroDeformation(QsoaError):
    """Raised where the theory requires ``p != 0``."""


class ConstructionInconsistent(QsoaError):
    pass


class InfiniteDimensional(QsoaError, ValueError):
    """A finite-dimensional construction was requested for an infinite-dimensional V(r)."""


class DimensionMismatch(QsoaError):
    pass


class SpanTooLarge(QsoaError):
    pass


class ParseError(QsoaError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
