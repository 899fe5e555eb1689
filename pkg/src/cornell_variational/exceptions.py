"""Exception hierarchy for the solver.

Every error raised on purpose by this package derives from
:class:`CornellError`, so callers can catch one type at the boundary.
"""


class CornellError(Exception):
    """Base class for all package errors."""


class QuadratureError(CornellError):
    """Base class for integration failures."""


class NonConvergence(QuadratureError):
    """Adaptive quadrature ran out of subdivisions.

    The best available estimate is attached so callers may decide to
    accept it anyway.
    """

    def __init__(self, value, error_estimate, subdivisions):
        self.value = value
        self.error_estimate = error_estimate
        self.subdivisions = subdivisions
        super().__init__(
            f"quadrature did not converge after {subdivisions} subdivisions "
            f"(estimate {value!r}, error {error_estimate!r})"
        )


class NonFiniteIntegrand(QuadratureError):
    """The integrand returned inf or nan."""

    def __init__(self, abscissa):
        self.abscissa = float(abscissa)
        super().__init__(f"integrand is not finite at x={self.abscissa!r}")


class DegenerateCubic(CornellError):
    """The virial cubic has no positive root (k = 0 without a linear term)."""


class ZeroEnergyDenominator(CornellError):
    """The energy expectation vanishes, so the discrepancy is undefined."""


class NoMinimumInWindow(CornellError):
    """The optimizer objective has no interior minimum in the scan window."""


class ObjectiveEvaluationFailed(CornellError):
    """The objective could not be evaluated at some shape parameter."""

    def __init__(self, b, cause):
        self.b = float(b)
        self.cause = cause
        super().__init__(f"objective evaluation failed at b={self.b!r}: {cause}")


class BracketExhausted(CornellError):
    """The shooting solver could not bracket the requested eigenvalue."""


class NodeMismatch(CornellError):
    """The converged shooting solution has the wrong number of nodes."""
