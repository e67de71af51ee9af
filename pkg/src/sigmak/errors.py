"""Exception types shared across the package."""


class SigmaKError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SigmaKError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class SingularityError(SigmaKError, ArithmeticError):
    """Evaluation requested on a singular locus (k = 0 with i >= 2, or the
    k_{c,2} locus of the integrating factor)."""


class UndefinedCurvatureError(SigmaKError, ArithmeticError):
    """Phase-curve second derivative undefined (alpha = 0 or 2k - l = 0)."""


class RegionError(SigmaKError, ValueError):
    """Evaluation outside (or too close to the boundary of) the connected
    k-interval a first integral was built on."""


class DegenerateError(SigmaKError, ValueError):
    """Degenerate configuration: alpha^2 + k^2 = 0, where the phase point
    carries no leaf (product-hypersurface branch)."""


class ClassificationError(SigmaKError, ValueError):
    """Start point incompatible with the requested orbit computation."""


class PoleError(SigmaKError, ArithmeticError):
    """Closed-form evaluation at a pole of the formula."""


class InapplicableError(SigmaKError, ValueError):
    """Diagnostic requested on data that does not satisfy its premise."""


class IntegrationError(SigmaKError, ArithmeticError):
    """Numerical integration failed; carries the last good sample."""

    def __init__(self, message, last_sample=None):
        super().__init__(message)
        self.last_sample = last_sample
