"""Maehly-type Pade-Chebyshev approximants of univariate functions.

Given the truncated Chebyshev series of f, the denominator coefficients q
solve a homogeneous Toeplitz-plus-Hankel system (nq equations, nq + 1
unknowns, so a nontrivial solution always exists), and the numerator
coefficients follow by a linearized product formula.

The numerator uses p_k = (1/2) sum_j (c_|k-j| + c_{k+j}) q_j for k >= 1
and p_0 = (1/2) sum_j c_j q_j.  Because the function series carries a
halved first term, the c_{j-k} contribution appears only for j > k; at
j = k the halved c_0 accounts for it.  This is the unique reading under
which f*Q - P has no components below index np + 1 (check f == 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import (
    ChebyshevSeries1D,
    Interval,
    affine_to_reference,
    cheb_coeffs_1d,
    eval_cheb_plain,
)
from .exceptions import InvalidArgumentError, OutOfDomainError
from .kernels import choose_kernel_vector, kernel_basis

__all__ = [
    "PadeOrder1D",
    "RationalCheb1D",
    "assemble_denominator_system",
    "solve_denominator",
    "compute_numerator",
    "build_pade_1d",
    "eval_rational_1d",
]

#: |Q| below this fraction of ||q||_1 raises the pole flag at evaluation.
POLE_GUARD = 1e-12

#: |q_0| below this fraction of ||q||_inf switches normalization to ||q||_inf = 1.
Q0_GUARD = 1e-10


@dataclass(frozen=True)
class PadeOrder1D:
    """Numerator/denominator degrees with np >= nq >= 1."""

    np: int
    nq: int

    def __post_init__(self):
        if not self.np >= self.nq >= 1:
            raise InvalidArgumentError(
                f"order requires np >= nq >= 1, got ({self.np}, {self.nq})"
            )


@dataclass(frozen=True)
class RationalCheb1D:
    """Rational approximant P/Q in the Chebyshev basis on an interval.

    Both p and q are plain (unprimed) coefficient vectors.
    """

    p: np.ndarray
    q: np.ndarray
    interval: Interval

    def __post_init__(self):
        p = np.atleast_1d(np.asarray(self.p, dtype=float))
        q = np.atleast_1d(np.asarray(self.q, dtype=float))
        if not (np.all(np.isfinite(p)) and np.all(np.isfinite(q))):
            raise InvalidArgumentError("coefficients must be finite")
        if not np.any(q):
            raise InvalidArgumentError("denominator must not be identically zero")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def _coeff_getter(coeffs: np.ndarray):
    def c(m: int) -> float:
        if m < 0:
            return 0.0
        return float(coeffs[m])

    return c


def assemble_denominator_system(
    series: ChebyshevSeries1D, order: PadeOrder1D
) -> np.ndarray:
    """The nq x (nq+1) Toeplitz-plus-Hankel homogeneous system matrix.

    Row for k = np+1 .. np+nq, column for j = 0 .. nq, with entry
    c_{k-j} + c_{k+j} (c_m = 0 for m < 0).
    """
    need = order.np + 2 * order.nq + 1
    if series.coeffs.size < need:
        raise InvalidArgumentError(
            f"series provides {series.coeffs.size} coefficients; "
            f"order ({order.np}, {order.nq}) requires {need}"
        )
    c = _coeff_getter(series.coeffs)
    A = np.empty((order.nq, order.nq + 1))
    for r in range(order.nq):
        k = order.np + 1 + r
        for j in range(order.nq + 1):
            A[r, j] = c(k - j) + c(k + j)
    return A


def solve_denominator(A: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Kernel vector of A, normalized to q_0 = 1 when q_0 is not tiny.

    Falls back to ||q||_inf = 1 when |q_0| <= 1e-10 * ||q||_inf.
    """
    q = choose_kernel_vector(kernel_basis(A, tol))
    qmax = np.max(np.abs(q))
    if abs(q[0]) > Q0_GUARD * qmax:
        return q / q[0]
    return q / qmax


def compute_numerator(
    series: ChebyshevSeries1D, q: np.ndarray, order: PadeOrder1D
) -> np.ndarray:
    """Numerator coefficients p_0..p_np from the series and a denominator q."""
    q = np.atleast_1d(np.asarray(q, dtype=float))
    if q.size != order.nq + 1:
        raise InvalidArgumentError(
            f"q has length {q.size}, expected nq + 1 = {order.nq + 1}"
        )
    need = order.np + order.nq + 1
    if series.coeffs.size < need:
        raise InvalidArgumentError(
            f"series provides {series.coeffs.size} coefficients; "
            f"numerator of order ({order.np}, {order.nq}) requires {need}"
        )
    c = _coeff_getter(series.coeffs)
    p = np.empty(order.np + 1)
    p[0] = 0.5 * sum(c(j) * q[j] for j in range(order.nq + 1))
    for k in range(1, order.np + 1):
        p[k] = 0.5 * sum(
            (c(abs(k - j)) + c(k + j)) * q[j] for j in range(order.nq + 1)
        )
    return p


def build_pade_1d(
    f,
    interval: Interval,
    order: PadeOrder1D,
    n: int,
    tol: float | None = None,
) -> RationalCheb1D:
    """Pade-Chebyshev approximant of f on `interval` from n-point quadrature."""
    series = cheb_coeffs_1d(f, interval, order.np + 2 * order.nq, n)
    return pade_from_series(series, order, tol)


def pade_from_series(
    series: ChebyshevSeries1D, order: PadeOrder1D, tol: float | None = None
) -> RationalCheb1D:
    """Approximant from an already-computed coefficient series."""
    A = assemble_denominator_system(series, order)
    q = solve_denominator(A, tol)
    p = compute_numerator(series, q, order)
    return RationalCheb1D(p=p, q=q, interval=series.interval)


def eval_rational_1d(R: RationalCheb1D, x):
    """Evaluate P(t)/Q(t); returns (value, pole_flag).

    The pole flag is raised where |Q(t)| < 1e-12 * ||q||_1; the computed
    value is still returned.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    inside = R.interval.contains(x_arr)
    if not np.all(inside):
        bad = x_arr[~inside][0]
        raise OutOfDomainError(
            f"x={bad} outside interval [{R.interval.a}, {R.interval.b}]"
        )
    t = affine_to_reference(R.interval, x_arr)
    num = eval_cheb_plain(R.p, t)
    den = eval_cheb_plain(R.q, t)
    num = np.atleast_1d(num)
    den = np.atleast_1d(den)
    flag = np.abs(den) < POLE_GUARD * np.sum(np.abs(R.q))
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = num / den
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return vals[0], bool(flag[0])
    return vals, flag
