"""Exception hierarchy shared across the package."""


class GraphIndicesError(Exception):
    """Base class for all package errors."""


class ParameterError(GraphIndicesError, ValueError):
    """A parameter is outside its documented range."""


class DegenerateGraphError(GraphIndicesError):
    """The graph has no edges, so Revan degrees are undefined."""


class DegenerateSpectrumError(GraphIndicesError):
    """The spectrum does not support the requested index (e.g. largest
    eigenvalue zero, or a non-positive sum under the logarithm)."""


class DegenerateSeriesError(GraphIndicesError):
    """A sample series has zero variance or too few values."""


class CalibrationError(GraphIndicesError):
    """Bisection calibration failed to converge within the iteration cap.

    Carries the best bracket found so the caller can inspect it.
    """

    def __init__(self, message, lo, hi, estimate):
        super().__init__(message)
        self.lo = lo
        self.hi = hi
        self.estimate = estimate


class FitError(GraphIndicesError):
    """Curve fit did not converge within the iteration cap.

    ``best`` holds the best-so-far parameters, flagged as unconverged.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
