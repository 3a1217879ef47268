"""Univariate Chebyshev machinery.

Chebyshev abscissae (first-kind roots), affine maps between a working
interval and the reference interval [-1, 1], coefficient computation by
Gauss-Chebyshev quadrature, and series evaluation by backward (Clenshaw)
recurrence.

Two evaluation conventions coexist and must not be mixed up:

* ``eval_cheb_series`` evaluates a *function series* whose first
  coefficient is halved (c0/2 + sum_{j>=1} c_j T_j), which is what
  ``cheb_coeffs_1d`` produces.
* ``eval_cheb_plain`` evaluates a plain sum (no halving), which is the
  convention for rational numerator/denominator polynomials.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    InvalidArgumentError,
    OutOfDomainError,
    QuadratureResolutionWarning,
    SamplingError,
)

__all__ = [
    "Interval",
    "ChebyshevSeries1D",
    "cheb_points",
    "affine_to_domain",
    "affine_to_reference",
    "chebyshev_basis",
    "cheb_coeffs_1d",
    "eval_cheb_series",
    "eval_cheb_plain",
    "sample_function",
]


@dataclass(frozen=True)
class Interval:
    """A nondegenerate real interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise InvalidArgumentError("interval endpoints must be finite")
        if not self.a < self.b:
            raise InvalidArgumentError(
                f"interval requires a < b, got [{self.a}, {self.b}]"
            )

    @property
    def width(self) -> float:
        return self.b - self.a

    def contains(self, x) -> np.ndarray:
        x = np.asarray(x)
        return (x >= self.a) & (x <= self.b)


@dataclass(frozen=True)
class ChebyshevSeries1D:
    """Truncated Chebyshev series c0..cd on an interval (first term halved).

    ``n_quad`` records the number of quadrature points used to compute the
    coefficients.
    """

    coeffs: np.ndarray
    interval: Interval
    n_quad: int

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise InvalidArgumentError("coeffs must be a non-empty 1-D vector")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidArgumentError("coeffs must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1


def cheb_points(n: int) -> np.ndarray:
    """Roots of T_n: t_l = cos((l - 0.5) pi / n), l = 1..n (decreasing)."""
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1 quadrature points, got {n}")
    l = np.arange(1, n + 1)
    return np.cos((l - 0.5) * np.pi / n)


def affine_to_domain(interval: Interval, t):
    """Map reference coordinate t in [-1, 1] to x in [a, b]."""
    return interval.a + interval.width * (np.asarray(t, dtype=float) + 1.0) / 2.0


def affine_to_reference(interval: Interval, x):
    """Inverse of :func:`affine_to_domain`."""
    return 2.0 * (np.asarray(x, dtype=float) - interval.a) / interval.width - 1.0


def chebyshev_basis(degree: int, t) -> np.ndarray:
    """Matrix T of shape (degree+1, len(t)) with T[k, l] = T_k(t_l).

    Built by the three-term recurrence; no trigonometric inversion.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    T = np.empty((degree + 1, t.size))
    T[0] = 1.0
    if degree >= 1:
        T[1] = t
    for k in range(2, degree + 1):
        T[k] = 2.0 * t * T[k - 1] - T[k - 2]
    return T


def sample_function(f, x: np.ndarray) -> np.ndarray:
    """Evaluate a scalar sampler on an array, accepting non-vectorized f."""
    try:
        vals = np.asarray(f(x), dtype=float)
        if vals.shape != x.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(xi)) for xi in x])
    return vals


def cheb_coeffs_1d(f, interval: Interval, d: int, n: int) -> ChebyshevSeries1D:
    """Chebyshev coefficients c_0..c_d of f on `interval` by n-point quadrature.

    c_k = (2/n) sum_l f(G(t_l)) T_k(t_l) with G the affine map onto the
    interval.  Warns (does not reject) when n < d + 1, where the discrete
    projection cannot resolve degree d.
    """
    if d < 0:
        raise InvalidArgumentError(f"degree must be >= 0, got {d}")
    if n < d + 1:
        warnings.warn(
            f"quadrature size n={n} cannot resolve degree d={d} (need n >= d+1)",
            QuadratureResolutionWarning,
            stacklevel=2,
        )
    t = cheb_points(n)
    x = affine_to_domain(interval, t)
    vals = sample_function(f, x)
    if not np.all(np.isfinite(vals)):
        bad = x[~np.isfinite(vals)][0]
        raise SamplingError(f"non-finite sample value at x={bad}", abscissa=bad)
    T = chebyshev_basis(d, t)
    coeffs = (2.0 / n) * (T @ vals)
    return ChebyshevSeries1D(coeffs=coeffs, interval=interval, n_quad=n)


def _clenshaw(coeffs: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Plain sum_k coeffs[k] T_k(t) by backward recurrence."""
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    for k in range(len(coeffs) - 1, 0, -1):
        b1, b2 = coeffs[k] + 2.0 * t * b1 - b2, b1
    return coeffs[0] + t * b1 - b2


def eval_cheb_plain(coeffs, t):
    """Plain Chebyshev sum (no halving of the first term)."""
    coeffs = np.atleast_1d(np.asarray(coeffs, dtype=float))
    if coeffs.size == 0:
        raise InvalidArgumentError("coeffs must be non-empty")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = _clenshaw(coeffs, t_arr)
    return out[0] if np.isscalar(t) or np.asarray(t).ndim == 0 else out


def eval_cheb_series(series: ChebyshevSeries1D, x):
    """Evaluate c0/2 + sum_{j>=1} c_j T_j at x inside the series interval."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    inside = series.interval.contains(x_arr)
    if not np.all(inside):
        bad = x_arr[~inside][0]
        raise OutOfDomainError(
            f"x={bad} outside interval [{series.interval.a}, {series.interval.b}]"
        )
    t = affine_to_reference(series.interval, x_arr)
    out = _clenshaw(series.coeffs, t) - 0.5 * series.coeffs[0]
    return out[0] if np.isscalar(x) or np.asarray(x).ndim == 0 else out
