"""Error types shared across the package."""


class PadechebError(Exception):
    """Base class for all padecheb errors."""


class InvalidArgumentError(PadechebError, ValueError):
    """An argument violates a documented precondition."""


class OutOfDomainError(PadechebError, ValueError):
    """Evaluation point lies outside the approximant's domain."""


class SamplingError(PadechebError):
    """The target function returned a non-finite value at a quadrature node."""

    def __init__(self, message, abscissa):
        super().__init__(message)
        self.abscissa = abscissa


class NoKernelError(PadechebError):
    """The homogeneous system has full column rank (empty kernel basis).

    Signals an ill-posed denominator system to the caller.
    """


class CellBuildError(PadechebError):
    """One or more cells of a piecewise build failed.

    `failures` is a list of (cell_index, exception) pairs; `partial` holds
    the piecewise object with the successfully built cells.
    """

    def __init__(self, failures, partial=None):
        cells = ", ".join(str(idx) for idx, _ in failures)
        super().__init__(f"build failed in cell(s): {cells}")
        self.failures = failures
        self.partial = partial


class QuadratureResolutionWarning(UserWarning):
    """Quadrature size too small to resolve the requested degree."""
