"""Exception types raised by the library."""


class AChebError(Exception):
    """Base class for library errors."""


class InvalidTupleError(AChebError, ValueError):
    """Coefficient tuple violates a0 != 0 / am != 0."""


class SingularInputError(AChebError, ValueError):
    """Evaluation point where a closed form has a vanishing denominator."""


class DegreeCapError(AChebError, ValueError):
    """Requested polynomial degree exceeds the solver cap."""


class RootFindingError(AChebError, ArithmeticError):
    """Simultaneous iteration failed to converge."""


class NotPisotError(AChebError, ValueError):
    """Polynomial fails the numeric Pisot check."""

    def __init__(self, message, census=None):
        super().__init__(message)
        self.census = census


class DivisionRemainderError(AChebError, ArithmeticError):
    """Exact division left a non-negligible remainder."""
