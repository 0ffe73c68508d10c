"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class TruncationError(ArithmeticError):
    """A series failed to reach its tail tolerance within the term budget.

    The partial sum and the remaining (uncertified) tail estimate are kept on
    the exception so callers can still report what was computed.
    """

    def __init__(self, message, partial_value=None, tail_estimate=None):
        super().__init__(message)
        self.partial_value = partial_value
        self.tail_estimate = tail_estimate
