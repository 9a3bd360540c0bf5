"""Exception hierarchy shared by all convexproj modules."""


class CoordinateError(Exception):
    """Base class for every error raised by this package."""


class WindowViolation(CoordinateError):
    """A (lambda, tau) pair lies outside Goldman's open boundary window."""


class DomainViolation(CoordinateError):
    """Shear/triangle data fails the length-positivity conditions."""


class NoPositiveRoot(CoordinateError):
    """The crossratio quadratic has no positive solution."""


class DegenerateConfiguration(CoordinateError):
    """A flag pairing or determinant is numerically zero."""


class NonPositiveRatio(CoordinateError):
    """A projective ratio that must be positive is not."""


class NoValidBranch(CoordinateError):
    """No scaling branch reproduces the required holonomy spectrum."""


class ClosureViolation(CoordinateError):
    """Length matching across a decomposition curve fails."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CountMismatch(CoordinateError):
    """Pants/gluing/boundary counts are inconsistent."""


class SlotReuse(CoordinateError):
    """A pants slot is glued or marked as boundary more than once."""


class NonNegativeEuler(CoordinateError):
    """The surface does not have negative Euler characteristic."""


class UnknownCurve(CoordinateError):
    """A curve key does not exist in the decomposition."""


class BoundaryCurve(CoordinateError):
    """A flow was requested along a boundary curve."""


class SchemaError(CoordinateError):
    """A coordinate file does not match the documented JSON schema."""


class ChartFailure(CoordinateError):
    """A point cannot be placed in the rendering chart X+Y+Z=1."""
