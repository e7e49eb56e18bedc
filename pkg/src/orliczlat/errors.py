"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: config problems exit 2,
budget overruns exit 3, failed invariant batteries exit 1.
"""

from __future__ import annotations


class OrliczError(Exception):
    """Base class for all package errors."""


class InvalidInputError(OrliczError, ValueError):
    """An argument violates a documented precondition."""


class ConjugateInfiniteError(OrliczError):
    """The convex conjugate is +inf at the requested point.

    Raised when the bracket expansion hits its cap while the slope of the
    function is still below the query point, i.e. the supremum does not
    stabilise at any finite argument.
    """

    def __init__(self, y: float, cap: float):
        self.y = y
        self.cap = cap
        super().__init__(f"conjugate infinite at y={y!r} (bracket cap {cap:g} reached)")


class ConvexityError(InvalidInputError):
    """A convexity probe failed; carries the violating abscissa."""

    def __init__(self, message: str, abscissa: float):
        self.abscissa = abscissa
        super().__init__(f"{message} (violated near x={abscissa:g})")


class NumericalFailureError(OrliczError):
    """An internal consistency gate failed; the result would be unreliable."""


class ResourceLimitError(OrliczError):
    """An enumeration or convolution exceeded its configured budget."""


class PreconditionError(OrliczError):
    """A diagnostic was invoked outside the regime where it is meaningful."""
