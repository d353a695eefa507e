"""Exception types shared across the library."""


class GroverLabError(Exception):
    """Base class for every error raised by this library."""


class SizeTooSmall(GroverLabError, ValueError):
    """Database size is below the minimum of 2."""


class EmptyMarkedSet(GroverLabError, ValueError):
    """No marked index was supplied; the search problem is undefined."""


class IndexOutOfRange(GroverLabError, ValueError):
    """An index falls outside the database range [0, n)."""


class EllOutOfRange(GroverLabError, ValueError):
    """Requested marked-set size is outside [1, n]."""


class DimensionMismatch(GroverLabError, ValueError):
    """State-vector length and instance size disagree."""


class BudgetExceeded(GroverLabError, RuntimeError):
    """Requested state vector is larger than the configured memory cap."""


class CapExceeded(GroverLabError, RuntimeError):
    """Requested dense restricted matrix is larger than the configured cap."""


class SingularCost(GroverLabError, ArithmeticError):
    """Expected cost is undefined: per-trial success probability is zero."""


class SingularCotangent(GroverLabError, ArithmeticError):
    """Stationarity residual is undefined where sin(j*theta - alpha) = 0."""


class OutOfValidityRegion(GroverLabError, ValueError):
    """Closed-form seed is undefined (alpha^2 < 2); callers fall back."""


class NoConvergence(GroverLabError, RuntimeError):
    """Fixed-point refinement of the stop point did not converge.

    `left_domain` is True when an iterate left the positive axis, which
    signals that the continuous cost has no interior stationary point
    (this happens when alpha/theta is small), as opposed to a plain
    iteration-budget failure.
    """

    def __init__(self, message: str, *, left_domain: bool = False):
        super().__init__(message)
        self.left_domain = left_domain
