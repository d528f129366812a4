"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SquarabilityError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInterval(SquarabilityError, ValueError):
    pass


class SharedEndpoint(SquarabilityError, ValueError):
    pass


class DimensionMismatch(SquarabilityError, ValueError):
    pass


class EmptyIndexSet(SquarabilityError, ValueError):
    pass


class IndexOutOfRange(SquarabilityError, IndexError):
    pass


class GeneralPositionViolation(SquarabilityError, ValueError):
    """Two sides of different boxes are collinear where strict order is required."""


class SizeMismatch(SquarabilityError, ValueError):
    pass


class InfeasibleAssignment(SquarabilityError, ValueError):
    pass


class NonPositiveValue(SquarabilityError, ValueError):
    pass


class TooLarge(SquarabilityError):
    """The elimination oracle exceeded its variable or inequality budget."""


class Unsupported(SquarabilityError, ValueError):
    """A Ramsey value outside the exact lookup table was requested."""


class TooFewNeighbors(SquarabilityError, ValueError):
    pass


class InvalidInstance(SquarabilityError, ValueError):
    pass


class NonCornerIntersection(SquarabilityError, ValueError):
    pass


class WiringConflict(SquarabilityError, ValueError):
    pass


class ParseError(SquarabilityError, ValueError):
    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class DuplicateId(ParseError):
    pass


class BadRational(ParseError):
    pass


class UnsupportedDimension(SquarabilityError, ValueError):
    pass
