# bezout_bezier/exceptions.py


class BezoutBezierError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BezoutBezierError, ValueError):
    def __init__(self, message: str, gcd: int | None = None):
        super().__init__(message)
        self.gcd = gcd


class HypothesisError(DomainError):
    """A theorem or proposition hypothesis does not hold for the given parameters."""

    def __init__(self, hypothesis: str, message: str | None = None):
        super().__init__(message or f"requires {hypothesis}")
        self.hypothesis = hypothesis


class CoordinateRangeError(DomainError, OverflowError):
    pass


class SweepFileError(BezoutBezierError):
    """Audit spec file could not be read or parsed."""
