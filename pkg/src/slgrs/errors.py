"""Exception hierarchy shared across the package."""
from __future__ import annotations


class GrsError(Exception):
    """Base class for every error raised by slgrs."""


class ShapeError(GrsError, ValueError):
    pass


class ValidationError(GrsError, ValueError):
    """Cartan data rejected by :func:`slgrs.grs.new_grs`."""


class NotSymmetric(ValidationError):
    pass


class BadDiagonal(ValidationError):
    pass


class NormNotTwo(GrsError, ValueError):
    pass


class NotPositiveDefinite(GrsError):
    """The requested operation needs a positive definite Cartan form."""


class TargetNotEnumerable(GrsError):
    pass


class SeedNotRoot(GrsError, ValueError):
    pass


class NameUnknown(GrsError, KeyError):
    pass


class Reducible(GrsError):
    pass


class VerificationFailure(GrsError):
    """A step guaranteed by theory failed; this always indicates a bug."""


class SearchExhausted(GrsError):
    """A backtracking search finished without finding a candidate."""
