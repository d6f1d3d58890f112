"""Exception types raised across the package."""

__all__ = [
    "HeckeError", "NotDivisible", "BudgetExceeded", "BasisMismatch",
    "NotDominant", "NotInIdeal", "NotInH1", "NotSymmetric",
    "ParseError", "VerificationFailure",
]


class HeckeError(Exception):
    """Base class for every error raised by heckeb2."""


class NotDivisible(HeckeError, ArithmeticError):
    pass


class BudgetExceeded(HeckeError):
    """A computation would need elements longer than the configured budget."""


class BasisMismatch(HeckeError, TypeError):
    pass


class NotDominant(HeckeError, ValueError):
    pass


class NotInIdeal(HeckeError, ValueError):
    pass


class NotInH1(HeckeError, ValueError):
    pass


class NotSymmetric(HeckeError, ValueError):
    pass


class ParseError(HeckeError, ValueError):
    pass


class VerificationFailure(HeckeError):
    """Two sides of an identity that should agree did not.

    ``report`` carries both sides so the mismatch can be inspected.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
