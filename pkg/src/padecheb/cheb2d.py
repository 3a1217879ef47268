"""Bivariate Chebyshev approximation on tensor grids, global and piecewise.

Coefficients are computed with the two-dimensional Gauss-Chebyshev
quadrature rule; the normalization factors (1 at (0,0), 2 when exactly one
index is zero, 4 otherwise) are baked into the coefficient matrix, so the
evaluation is a plain double sum with no halving.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chebyshev import (
    Interval,
    affine_to_domain,
    affine_to_reference,
    cheb_points,
    chebyshev_basis,
)
from .exceptions import (
    CellBuildError,
    InvalidArgumentError,
    OutOfDomainError,
    SamplingError,
)
from .piecewise1d import Partition1D, parallel_map

__all__ = [
    "Rect",
    "ChebyshevSeries2D",
    "Partition2D",
    "PiecewiseApprox2D",
    "epsilon_factors",
    "cheb_coeffs_2d",
    "eval_cheb_series_2d",
    "build_pi2dc",
    "eval_pi2d",
]


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle [a_x, b_x] x [a_y, b_y]."""

    x_interval: Interval
    y_interval: Interval

    def contains(self, x, y) -> np.ndarray:
        return self.x_interval.contains(x) & self.y_interval.contains(y)


@dataclass(frozen=True)
class ChebyshevSeries2D:
    """Coefficient matrix c_{i,j} on a rectangle (normalization baked in)."""

    coeffs: np.ndarray  # shape (d_x + 1, d_y + 1)
    rect: Rect
    n_quad: tuple  # (n_x, n_y)

    def __post_init__(self):
        coeffs = np.atleast_2d(np.asarray(self.coeffs, dtype=float))
        if coeffs.ndim != 2 or coeffs.size == 0:
            raise InvalidArgumentError("coeffs must be a non-empty matrix")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidArgumentError("coeffs must be finite")
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True)
class Partition2D:
    """Independent x- and y-direction partitions of a rectangle."""

    px: Partition1D
    py: Partition1D

    @property
    def domain(self) -> Rect:
        return Rect(self.px.domain, self.py.domain)

    def cell(self, jx: int, jy: int) -> Rect:
        return Rect(self.px.cell(jx), self.py.cell(jy))


@dataclass
class PiecewiseApprox2D:
    """N_x x N_y grid of per-cell approximants (series or rational)."""

    partition: Partition2D
    cells: list  # cells[jx][jy]
    failures: list = field(default_factory=list)  # ((jx, jy), exception)


def epsilon_factors(dx: int, dy: int) -> np.ndarray:
    """Quadrature normalization: 1 at (0,0), 2 on the axes, 4 inside."""
    ex = np.full(dx + 1, 2.0)
    ex[0] = 1.0
    ey = np.full(dy + 1, 2.0)
    ey[0] = 1.0
    return np.outer(ex, ey)


def sample_function_2d(f, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(X, Y), dtype=float)
        if vals.shape != X.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array(
            [[float(f(X[i, j], Y[i, j])) for j in range(X.shape[1])]
             for i in range(X.shape[0])]
        )
    return vals


def cheb_coeffs_2d(f, rect: Rect, d, n) -> ChebyshevSeries2D:
    """Coefficients c_{i,j}, i <= d_x, j <= d_y, by (n_x x n_y) quadrature."""
    dx, dy = d
    nx, ny = n
    tx = cheb_points(nx)
    ty = cheb_points(ny)
    gx = affine_to_domain(rect.x_interval, tx)
    gy = affine_to_domain(rect.y_interval, ty)
    X, Y = np.meshgrid(gx, gy, indexing="ij")
    F = sample_function_2d(f, X, Y)
    if not np.all(np.isfinite(F)):
        i, j = np.argwhere(~np.isfinite(F))[0]
        raise SamplingError(
            f"non-finite sample at (x, y)=({gx[i]}, {gy[j]})",
            abscissa=(float(gx[i]), float(gy[j])),
        )
    Tx = chebyshev_basis(dx, tx)  # (dx+1, nx)
    Ty = chebyshev_basis(dy, ty)  # (dy+1, ny)
    C = epsilon_factors(dx, dy) / (nx * ny) * (Tx @ F @ Ty.T)
    return ChebyshevSeries2D(coeffs=C, rect=rect, n_quad=(nx, ny))


def _check_rect(rect: Rect, x_arr, y_arr):
    inside = rect.contains(x_arr, y_arr)
    if not np.all(inside):
        i = np.flatnonzero(~inside.ravel())[0]
        raise OutOfDomainError(
            f"point ({x_arr.ravel()[i]}, {y_arr.ravel()[i]}) outside rectangle"
        )


def eval_tensor_sum(C: np.ndarray, tx: np.ndarray, ty: np.ndarray) -> np.ndarray:
    """Plain double sum sum_ij C[i,j] T_i(tx_k) T_j(ty_k) for paired points."""
    Tx = chebyshev_basis(C.shape[0] - 1, tx)
    Ty = chebyshev_basis(C.shape[1] - 1, ty)
    return np.einsum("ik,ij,jk->k", Tx, C, Ty)


def eval_cheb_series_2d(series: ChebyshevSeries2D, x, y):
    """Evaluate the truncated series at paired points (x, y) in the rectangle."""
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    y_arr = np.atleast_1d(np.asarray(y, dtype=float))
    _check_rect(series.rect, x_arr, y_arr)
    tx = affine_to_reference(series.rect.x_interval, x_arr)
    ty = affine_to_reference(series.rect.y_interval, y_arr)
    out = eval_tensor_sum(series.coeffs, tx, ty)
    return out[0] if scalar else out


def build_grid_cells(partition: Partition2D, build_cell):
    """Run build_cell over the cell grid, aggregating per-cell failures."""
    nx_cells = partition.px.n_cells
    ny_cells = partition.py.n_cells
    pairs = [(jx, jy) for jx in range(nx_cells) for jy in range(ny_cells)]

    def guarded(pair):
        try:
            return build_cell(*pair)
        except Exception as exc:  # noqa: BLE001 - aggregated per cell
            return exc

    flat = parallel_map(guarded, pairs)
    cells = [[None] * ny_cells for _ in range(nx_cells)]
    failures = []
    for (jx, jy), result in zip(pairs, flat):
        if isinstance(result, Exception):
            failures.append(((jx, jy), result))
        else:
            cells[jx][jy] = result
    return cells, failures


def build_pi2dc(f, partition: Partition2D, d, n) -> PiecewiseApprox2D:
    """Piecewise bivariate Chebyshev approximant (one series per cell)."""

    def build_cell(jx, jy):
        return cheb_coeffs_2d(f, partition.cell(jx, jy), d, n)

    cells, failures = build_grid_cells(partition, build_cell)
    return PiecewiseApprox2D(partition=partition, cells=cells, failures=failures)


def eval_pi2d(P: PiecewiseApprox2D, x, y):
    """Evaluate a piecewise 2D approximant; returns (value, pole_flag).

    Ownership is half-open per axis, closed on the last cell of each axis.
    """
    from .pade2d import RationalCheb2D, eval_rational_2d

    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    y_arr = np.atleast_1d(np.asarray(y, dtype=float))
    ix = P.partition.px.locate(x_arr)
    iy = P.partition.py.locate(y_arr)
    vals = np.empty_like(x_arr)
    flags = np.zeros(x_arr.shape, dtype=bool)
    key = ix * P.partition.py.n_cells + iy
    for k in np.unique(key):
        mask = key == k
        jx, jy = divmod(int(k), P.partition.py.n_cells)
        cell = P.cells[jx][jy]
        if cell is None:
            raise CellBuildError(P.failures, partial=P)
        if isinstance(cell, RationalCheb2D):
            v, fl = eval_rational_2d(cell, x_arr[mask], y_arr[mask])
            vals[mask] = v
            flags[mask] = fl
        else:
            vals[mask] = eval_cheb_series_2d(cell, x_arr[mask], y_arr[mask])
    if scalar:
        return vals[0], bool(flags[0])
    return vals, flags
