"""Exception hierarchy shared by the library and the CLI."""


class WeightedFanoError(Exception):
    """Base class for all errors raised by this package."""


class WeightsError(WeightedFanoError, ValueError):
    """Malformed weight tuple or index set (a usage error)."""


class PreconditionError(WeightedFanoError, ValueError):
    """A domain precondition of the requested invariant does not hold."""


class OutsideTheoremRange(PreconditionError):
    """The requested degree lies outside the range where the pullback formula is proved."""


class InvariantViolation(WeightedFanoError, ArithmeticError):
    """An internal consistency check failed (non-integral constant, diagram that does not commute).

    Seeing this means a bug or violated preconditions upstream, never bad user input.
    """
