"""Piecewise Pade-Chebyshev approximation of piecewise smooth functions.

Univariate and bivariate Chebyshev series, Maehly-type Pade-Chebyshev
rationalization, and their piecewise variants, which suppress the Gibbs
phenomenon near singularities without prior knowledge of their locations.
"""

from .analysis import (
    ConvergenceTable,
    ErrorReport,
    convergence_orders,
    error_norms,
    error_norms_2d,
    midpoint_grid,
)
from .cheb2d import (
    ChebyshevSeries2D,
    Partition2D,
    PiecewiseApprox2D,
    Rect,
    build_pi2dc,
    cheb_coeffs_2d,
    eval_cheb_series_2d,
    eval_pi2d,
)
from .chebyshev import (
    ChebyshevSeries1D,
    Interval,
    affine_to_domain,
    affine_to_reference,
    cheb_coeffs_1d,
    cheb_points,
    chebyshev_basis,
    eval_cheb_plain,
    eval_cheb_series,
)
from .exceptions import (
    CellBuildError,
    InvalidArgumentError,
    NoKernelError,
    OutOfDomainError,
    PadechebError,
    QuadratureResolutionWarning,
    SamplingError,
)
from .functions import FunctionSpec, get_function, registry
from .kernels import KernelResult, choose_kernel_vector, kernel_basis
from .pade1d import (
    PadeOrder1D,
    RationalCheb1D,
    assemble_denominator_system,
    build_pade_1d,
    compute_numerator,
    eval_rational_1d,
    pade_from_series,
    solve_denominator,
)
from .pade2d import (
    PadeOrder2D,
    RationalCheb2D,
    assemble_denominator_system_2d,
    build_pade_2d,
    build_pi2dpc,
    compute_numerator_2d,
    eval_rational_2d,
    pade_2d_from_series,
    solve_denominator_2d,
)
from .piecewise1d import (
    Partition1D,
    PiecewiseApprox1D,
    build_picheb,
    build_pipc,
    eval_pipc,
    uniform_partition,
)

__version__ = "0.1.0"
