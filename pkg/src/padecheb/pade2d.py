"""Bivariate Maehly Pade-Chebyshev construction and the piecewise driver.

The denominator coefficients solve a homogeneous block-Toeplitz-plus-
block-Hankel system generated by the Lutterodt-style index set
J = {(i, j) : np1+1 <= i <= np1+nq1+1, np2+1 <= j <= np2+nq2+1} minus its
far corner, which yields (nq1+1)(nq2+1) - 1 equations in
(nq1+1)(nq2+1) unknowns.  Equations are ordered j-fastest within
i-blocks (removing the corner removes the last row); unknowns are ordered
s-fastest within r-blocks.

The numerator formula expands the product of the coefficient series
(normalization baked in, so no halving) with the denominator polynomial
through T_a T_b = (T_{a+b} + T_{|a-b|}) / 2 per axis.  Per axis the
coefficient sources for index a against a denominator mode r are
c_{a-r}, c_{a+r} and c_{r-a} (negative indices drop); for a = 0 the
single source c_r counts twice when r = 0.  Note the a = r collision
contributes c_0 twice by design: both product branches land there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cheb2d import (
    ChebyshevSeries2D,
    Partition2D,
    PiecewiseApprox2D,
    Rect,
    build_grid_cells,
    cheb_coeffs_2d,
    eval_tensor_sum,
    _check_rect,
)
from .chebyshev import affine_to_reference
from .exceptions import InvalidArgumentError
from .kernels import choose_kernel_vector, kernel_basis
from .pade1d import POLE_GUARD, Q0_GUARD

__all__ = [
    "PadeOrder2D",
    "RationalCheb2D",
    "assemble_denominator_system_2d",
    "solve_denominator_2d",
    "compute_numerator_2d",
    "build_pade_2d",
    "eval_rational_2d",
    "build_pi2dpc",
]


@dataclass(frozen=True)
class PadeOrder2D:
    """Per-axis numerator/denominator degrees with np_i >= nq_i >= 1."""

    np: tuple  # (np1, np2)
    nq: tuple  # (nq1, nq2)

    def __post_init__(self):
        np1, np2 = self.np
        nq1, nq2 = self.nq
        if not (np1 >= nq1 >= 1 and np2 >= nq2 >= 1):
            raise InvalidArgumentError(
                f"order requires np_i >= nq_i >= 1 per axis, got {self.np}, {self.nq}"
            )

    @property
    def quad_degree(self) -> tuple:
        """Series extents consumed by the denominator system."""
        return (self.np[0] + 2 * self.nq[0] + 1, self.np[1] + 2 * self.nq[1] + 1)


@dataclass(frozen=True)
class RationalCheb2D:
    """Rational approximant P/Q in the tensor Chebyshev basis on a rectangle."""

    P: np.ndarray  # (np1+1, np2+1)
    Q: np.ndarray  # (nq1+1, nq2+1)
    rect: Rect

    def __post_init__(self):
        P = np.atleast_2d(np.asarray(self.P, dtype=float))
        Q = np.atleast_2d(np.asarray(self.Q, dtype=float))
        if not (np.all(np.isfinite(P)) and np.all(np.isfinite(Q))):
            raise InvalidArgumentError("coefficients must be finite")
        if not np.any(Q):
            raise InvalidArgumentError("denominator must not be identically zero")
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)


def _coeff2(coeffs: np.ndarray):
    def c(i: int, j: int) -> float:
        if i < 0 or j < 0:
            return 0.0
        return float(coeffs[i, j])

    return c


def assemble_denominator_system_2d(
    series: ChebyshevSeries2D, order: PadeOrder2D
) -> np.ndarray:
    """Homogeneous system matrix, ((nq1+1)(nq2+1) - 1) x ((nq1+1)(nq2+1)).

    Row for (i, j) in J minus its far corner, entry for column (r, s):
    c_{i-r,j-s} + c_{i-r,j+s} + c_{i+r,j-s} + c_{i+r,j+s} with any
    negative index giving zero.
    """
    np1, np2 = order.np
    nq1, nq2 = order.nq
    need_x, need_y = order.quad_degree
    have_x = series.coeffs.shape[0] - 1
    have_y = series.coeffs.shape[1] - 1
    if have_x < need_x or have_y < need_y:
        raise InvalidArgumentError(
            f"series covers indices up to ({have_x}, {have_y}); "
            f"order needs ({need_x}, {need_y})"
        )
    c = _coeff2(series.coeffs)
    n_unknowns = (nq1 + 1) * (nq2 + 1)
    rows = []
    for i in range(np1 + 1, np1 + nq1 + 2):
        for j in range(np2 + 1, np2 + nq2 + 2):
            if i == np1 + nq1 + 1 and j == np2 + nq2 + 1:
                continue
            row = np.empty(n_unknowns)
            col = 0
            for r in range(nq1 + 1):
                for s in range(nq2 + 1):
                    row[col] = (
                        c(i - r, j - s)
                        + c(i - r, j + s)
                        + c(i + r, j - s)
                        + c(i + r, j + s)
                    )
                    col += 1
            rows.append(row)
    return np.array(rows)


def solve_denominator_2d(
    A: np.ndarray, order: PadeOrder2D, tol: float | None = None
) -> np.ndarray:
    """Kernel vector reshaped to the (nq1+1) x (nq2+1) denominator matrix.

    Normalized to q_{0,0} = 1 when that entry is not tiny, else to
    ||Q||_inf = 1.
    """
    nq1, nq2 = order.nq
    q = choose_kernel_vector(kernel_basis(A, tol))
    Q = q.reshape(nq1 + 1, nq2 + 1)  # s-fastest ordering matches C layout
    qmax = np.max(np.abs(Q))
    if abs(Q[0, 0]) > Q0_GUARD * qmax:
        return Q / Q[0, 0]
    return Q / qmax


def _axis_terms(a: int, r: int):
    """Per-axis coefficient sources (index, weight) for target mode a."""
    if a == 0:
        return [(r, 2.0 if r == 0 else 1.0)]
    terms = []
    for idx in (a - r, a + r, r - a):
        if idx >= 0:
            terms.append((idx, 1.0))
    return terms


def compute_numerator_2d(
    series: ChebyshevSeries2D, Q: np.ndarray, order: PadeOrder2D
) -> np.ndarray:
    """Numerator matrix P over the index set {0..np1} x {0..np2}."""
    np1, np2 = order.np
    nq1, nq2 = order.nq
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    if Q.shape != (nq1 + 1, nq2 + 1):
        raise InvalidArgumentError(
            f"Q has shape {Q.shape}, expected ({nq1 + 1}, {nq2 + 1})"
        )
    have_x = series.coeffs.shape[0] - 1
    have_y = series.coeffs.shape[1] - 1
    if have_x < np1 + nq1 or have_y < np2 + nq2:
        raise InvalidArgumentError(
            f"series covers indices up to ({have_x}, {have_y}); "
            f"numerator needs ({np1 + nq1}, {np2 + nq2})"
        )
    c = _coeff2(series.coeffs)
    P = np.empty((np1 + 1, np2 + 1))
    for a in range(np1 + 1):
        for b in range(np2 + 1):
            acc = 0.0
            for r in range(nq1 + 1):
                xterms = _axis_terms(a, r)
                for s in range(nq2 + 1):
                    q_rs = Q[r, s]
                    if q_rs == 0.0:
                        continue
                    yterms = _axis_terms(b, s)
                    contrib = 0.0
                    for u, wu in xterms:
                        for v, wv in yterms:
                            contrib += wu * wv * c(u, v)
                    acc += q_rs * contrib
            P[a, b] = 0.25 * acc
    return P


def _eta_row(c, i: int, j: int, nq1: int, nq2: int) -> np.ndarray:
    """Coefficient row of the residual eta_{i,j} as a functional of q."""
    row = np.empty((nq1 + 1) * (nq2 + 1))
    col = 0
    for r in range(nq1 + 1):
        xterms = _axis_terms(i, r)
        for s in range(nq2 + 1):
            yterms = _axis_terms(j, s)
            row[col] = 0.25 * sum(
                wu * wv * c(u, v) for u, wu in xterms for v, wv in yterms
            )
            col += 1
    return row


def _side_band_rows(series: ChebyshevSeries2D, order: PadeOrder2D) -> np.ndarray:
    """Residual rows just outside the numerator box and the J-set.

    These are the next order conditions not enforced by the homogeneous
    system; they discriminate between kernel vectors when the system is
    rank deficient.
    """
    np1, np2 = order.np
    nq1, nq2 = order.nq
    c = _coeff2(series.coeffs)
    rows = []
    for i in range(np1 + 1):
        for j in range(np2 + 1, np2 + nq2 + 2):
            rows.append(_eta_row(c, i, j, nq1, nq2))
    for i in range(np1 + 1, np1 + nq1 + 2):
        for j in range(np2 + 1):
            rows.append(_eta_row(c, i, j, nq1, nq2))
    rows.append(_eta_row(c, np1 + nq1 + 1, np2 + nq2 + 1, nq1, nq2))
    return np.array(rows)


def _noise_floor_tol(A: np.ndarray, series: ChebyshevSeries2D) -> float:
    """Rank tolerance anchored to the coefficient scale.

    The assembled entries carry absolute quadrature roundoff of order
    eps * max|c|; singular values below that level are indistinguishable
    from zero even when the matrix itself is small.
    """
    cmax = float(np.max(np.abs(series.coeffs)))
    smax = float(np.linalg.norm(A, 2)) if A.size else 0.0
    return max(A.shape) * np.finfo(float).eps * max(smax, cmax)


def _normalize_q(Q: np.ndarray) -> np.ndarray:
    qmax = np.max(np.abs(Q))
    if abs(Q[0, 0]) > Q0_GUARD * qmax:
        return Q / Q[0, 0]
    return Q / qmax


def pade_2d_from_series(
    series: ChebyshevSeries2D, order: PadeOrder2D, tol: float | None = None
) -> RationalCheb2D:
    """Approximant from an already-computed coefficient series.

    When the homogeneous system is rank deficient, the kernel vector is
    chosen by minimizing the side-band residuals within the kernel
    subspace (see :func:`_side_band_rows`); with a one-dimensional kernel
    this coincides with the plain last-column rule.
    """
    nq1, nq2 = order.nq
    A = assemble_denominator_system_2d(series, order)
    tol_eff = tol if tol is not None else _noise_floor_tol(A, series)
    ker = kernel_basis(A, tol_eff)
    if ker.dim <= 1:
        q = choose_kernel_vector(ker)
    else:
        B = _side_band_rows(series, order)
        _, _, Vt = np.linalg.svd(B @ ker.basis, full_matrices=False)
        q = ker.basis @ Vt[-1]
        idx = np.flatnonzero(np.abs(q) > 1e-12)
        if idx.size and q[idx[0]] < 0:
            q = -q
    Q = _normalize_q(q.reshape(nq1 + 1, nq2 + 1))
    P = compute_numerator_2d(series, Q, order)
    return RationalCheb2D(P=P, Q=Q, rect=series.rect)


def build_pade_2d(
    f, rect: Rect, order: PadeOrder2D, n, tol: float | None = None
) -> RationalCheb2D:
    """Bivariate Pade-Chebyshev approximant of f on `rect`."""
    series = cheb_coeffs_2d(f, rect, order.quad_degree, n)
    return pade_2d_from_series(series, order, tol)


def eval_rational_2d(R: RationalCheb2D, x, y):
    """Evaluate P/Q at paired points; returns (value, pole_flag)."""
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    y_arr = np.atleast_1d(np.asarray(y, dtype=float))
    _check_rect(R.rect, x_arr, y_arr)
    tx = affine_to_reference(R.rect.x_interval, x_arr)
    ty = affine_to_reference(R.rect.y_interval, y_arr)
    num = eval_tensor_sum(R.P, tx, ty)
    den = eval_tensor_sum(R.Q, tx, ty)
    flag = np.abs(den) < POLE_GUARD * np.sum(np.abs(R.Q))
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = num / den
    if scalar:
        return vals[0], bool(flag[0])
    return vals, flag


def build_pi2dpc(
    f, partition: Partition2D, order: PadeOrder2D, n, tol: float | None = None
) -> PiecewiseApprox2D:
    """Piecewise bivariate Pade-Chebyshev approximant (uniform order)."""

    def build_cell(jx, jy):
        return build_pade_2d(f, partition.cell(jx, jy), order, n, tol)

    cells, failures = build_grid_cells(partition, build_cell)
    return PiecewiseApprox2D(partition=partition, cells=cells, failures=failures)
