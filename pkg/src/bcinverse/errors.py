"""Exception types raised across the package."""


class BCInverseError(Exception):
    """Base class for all structured errors."""


class RingMismatchError(BCInverseError, ValueError):
    pass


class UnsupportedRingError(BCInverseError, ValueError):
    pass


class NotIdempotentError(BCInverseError, ValueError):
    pass


class EnumerationLimitError(BCInverseError, ValueError):
    def __init__(self, size, limit):
        super().__init__(f"enumeration of {size} items exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class UnknownLawError(BCInverseError, KeyError):
    def __str__(self):
        return f"unknown law id: {self.args[0]!r}"


class ShapeError(BCInverseError, ValueError):
    pass
