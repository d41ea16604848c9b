"""Exception types shared across the package."""


class FbasError(Exception):
    """Base class for all errors raised by this package."""


class EmptyPattern(FbasError):
    """A pattern of length zero was supplied where one byte is required."""


class EmptyCorpus(FbasError):
    """A corpus or text of length zero was supplied."""


class InvalidProbability(FbasError):
    """A probability outside [0, 1] was supplied."""


class IoFailure(FbasError):
    """Reading a file or stream failed."""


class MatcherDisagreement(FbasError):
    """Two matchers returned different match positions for the same input.

    This always indicates an implementation bug, never a data condition.
    """

    def __init__(self, message: str, pattern: bytes = b"", first_difference: int | None = None):
        super().__init__(message)
        self.pattern = pattern
        self.first_difference = first_difference
