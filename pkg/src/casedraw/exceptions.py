"""Exception types raised by casedraw."""


class CasingError(Exception):
    """Base class for all casedraw errors."""


class DegenerateOverlap(CasingError):
    """Two segments overlap along a positive length."""


class ParallelEdges(CasingError):
    """Crossing angle requested for two parallel edges."""


class InvalidDrawingError(CasingError, ValueError):
    """A drawing failed validation.

    ``report`` holds the :class:`~casedraw.geometry.ValidationReport`.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CasingMismatch(CasingError, ValueError):
    """A casing does not cover exactly the crossings of an arrangement."""


class BudgetExceeded(CasingError):
    """An exact exponential search ran past its node budget."""


class CapExceeded(CasingError):
    """The brute-force oracle was asked for an instance above its cap."""


class OpenProblemError(CasingError, ValueError):
    """The requested model/objective pair has no known algorithm."""


class DocumentError(CasingError, ValueError):
    """A drawing or casing document is malformed.

    ``path`` names the offending field, e.g. ``edges[3].v``.
    """

    def __init__(self, message, path=None):
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path
