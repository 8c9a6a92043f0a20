"""Exception hierarchy shared by all kernel modules."""


class KernelError(Exception):
    """Base class for every error raised by this package."""


class InvalidCurve(KernelError):
    """Curve data rejected at construction (bad vertices, illegal support samples, ...)."""


class ZeroVector(KernelError):
    """A direction argument is numerically zero."""


class DegenerateInput(KernelError):
    """Coincident points or otherwise degenerate geometric input."""


class CollinearInput(KernelError):
    """Three collinear points where a nondegenerate triangle is required."""


class NoConvergence(KernelError):
    """An iterative solver exhausted its iteration budget."""


class TheoremViolation(KernelError):
    """A solver produced more solutions than strict convexity permits.

    This never fires on well-formed input; it signals a kernel bug or a curve
    whose declared strict convexity is false.
    """


class IdenticalPlacement(KernelError):
    """Two placed curves coincide, so their intersection is infinite."""


class UnboundedUnsupported(KernelError):
    """Operation is defined only for bounded curves (or fails in this direction)."""


class MixedRatios(KernelError):
    """A translate-only operation received a homothety with ratio != 1."""


class SubsetExplosion(KernelError):
    """A subset enumeration would exceed the configured cap."""


class PreconditionFailed(KernelError):
    """A documented precondition of the operation does not hold for the input."""
