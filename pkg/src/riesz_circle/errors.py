"""Exception and warning types raised by riesz_circle."""


class RieszError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RieszError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """The function has a pole at the requested argument."""


class ExceptionalIndexError(DomainError):
    """``s - 2n == 1``: the coefficient is singular and the log-term
    (odd positive integer ``s``) expansion must be used instead."""


class CapacityError(RieszError, IndexError):
    """A request exceeds the size of a precomputed table."""


class PrecisionError(RieszError, ArithmeticError):
    """Floating point overflow or loss of all significant digits."""


class ConfigurationError(RieszError):
    """The requested computation needs a different precision/config."""


class TruncationWarning(RuntimeWarning):
    """A convergent series was cut off before meeting its tolerance."""

    def __init__(self, message: str, last_term: float):
        super().__init__(message)
        self.last_term = last_term
