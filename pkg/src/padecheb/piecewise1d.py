"""Piecewise approximation on a partitioned interval (PiPC).

A partition splits [a, b] into N cells; each cell gets its own Maehly
Pade-Chebyshev approximant (or plain truncated Chebyshev series).  Cell
ownership is half-open [a_j, a_{j+1}) except the last cell, which is
closed at b.  Cells straddling a singularity get no special treatment:
suppressing the Gibbs oscillation there without prior knowledge of the
singularity is the point of the construction.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .chebyshev import (
    ChebyshevSeries1D,
    Interval,
    affine_to_domain,
    cheb_points,
    chebyshev_basis,
    eval_cheb_series,
    sample_function,
)
from .exceptions import (
    CellBuildError,
    InvalidArgumentError,
    OutOfDomainError,
    SamplingError,
)
from .pade1d import PadeOrder1D, RationalCheb1D, eval_rational_1d, pade_from_series

__all__ = [
    "Partition1D",
    "PiecewiseApprox1D",
    "uniform_partition",
    "build_pipc",
    "build_picheb",
    "eval_pipc",
]


def thread_count() -> int:
    """Parallelism cap from PADECHEB_THREADS (default 1, sequential)."""
    try:
        return max(1, int(os.environ.get("PADECHEB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Map preserving order, threaded when PADECHEB_THREADS > 1."""
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class Partition1D:
    """Strictly increasing partition nodes a_0 < a_1 < ... < a_N."""

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.atleast_1d(np.asarray(self.nodes, dtype=float))
        if nodes.size < 2:
            raise InvalidArgumentError("partition needs at least two nodes")
        if not np.all(np.diff(nodes) > 0):
            raise InvalidArgumentError("partition nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @property
    def n_cells(self) -> int:
        return self.nodes.size - 1

    @property
    def domain(self) -> Interval:
        return Interval(float(self.nodes[0]), float(self.nodes[-1]))

    def cell(self, j: int) -> Interval:
        return Interval(float(self.nodes[j]), float(self.nodes[j + 1]))

    def locate(self, x) -> np.ndarray:
        """Owning cell index per point; half-open cells, last cell closed."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any((x < self.nodes[0]) | (x > self.nodes[-1])):
            bad = x[(x < self.nodes[0]) | (x > self.nodes[-1])][0]
            raise OutOfDomainError(f"x={bad} outside [{self.nodes[0]}, {self.nodes[-1]}]")
        idx = np.searchsorted(self.nodes, x, side="right") - 1
        return np.minimum(idx, self.n_cells - 1)


def uniform_partition(interval: Interval, N: int) -> Partition1D:
    """N equal cells; endpoint nodes are exactly a and b."""
    if N < 1:
        raise InvalidArgumentError(f"need N >= 1 cells, got {N}")
    nodes = interval.a + np.arange(N + 1) * (interval.width / N)
    nodes[0] = interval.a
    nodes[-1] = interval.b
    return Partition1D(nodes=nodes)


@dataclass
class PiecewiseApprox1D:
    """Per-cell approximants over a partition.

    ``cells[j]`` is a RationalCheb1D or ChebyshevSeries1D for cell j, or
    None when that cell's build failed (see ``failures``).
    """

    partition: Partition1D
    cells: list
    orders: list
    failures: list = field(default_factory=list)


def _normalize_orders(orders, n_cells: int) -> list:
    if isinstance(orders, PadeOrder1D):
        return [orders] * n_cells
    orders = list(orders)
    if len(orders) != n_cells:
        raise InvalidArgumentError(
            f"got {len(orders)} per-cell orders for {n_cells} cells"
        )
    return orders


def build_pipc(
    f,
    partition: Partition1D,
    orders,
    n: int,
    tol: float | None = None,
) -> PiecewiseApprox1D:
    """Piecewise Pade-Chebyshev approximant of f over the partition.

    A single reference-node set (and Chebyshev basis table) is shared by
    all cells; each cell samples f through its own affine map.  Per-cell
    failures are collected in ``failures`` and the build continues.
    """
    n_cells = partition.n_cells
    order_list = _normalize_orders(orders, n_cells)
    t = cheb_points(n)
    max_d = max(o.np + 2 * o.nq for o in order_list)
    T = chebyshev_basis(max_d, t)

    def build_cell(j):
        cell = partition.cell(j)
        order = order_list[j]
        d = order.np + 2 * order.nq
        x = affine_to_domain(cell, t)
        vals = sample_function(f, x)
        if not np.all(np.isfinite(vals)):
            bad = x[~np.isfinite(vals)][0]
            raise SamplingError(f"non-finite sample at x={bad}", abscissa=bad)
        coeffs = (2.0 / n) * (T[: d + 1] @ vals)
        series = ChebyshevSeries1D(coeffs=coeffs, interval=cell, n_quad=n)
        return pade_from_series(series, order, tol)

    cells, failures = [], []
    for j, result in enumerate(parallel_map(_catching(build_cell), range(n_cells))):
        if isinstance(result, Exception):
            cells.append(None)
            failures.append((j, result))
        else:
            cells.append(result)
    return PiecewiseApprox1D(
        partition=partition, cells=cells, orders=order_list, failures=failures
    )


def build_picheb(f, partition: Partition1D, d: int, n: int) -> PiecewiseApprox1D:
    """Piecewise truncated Chebyshev series (degree d per cell)."""
    t = cheb_points(n)
    T = chebyshev_basis(d, t)

    def build_cell(j):
        cell = partition.cell(j)
        x = affine_to_domain(cell, t)
        vals = sample_function(f, x)
        if not np.all(np.isfinite(vals)):
            bad = x[~np.isfinite(vals)][0]
            raise SamplingError(f"non-finite sample at x={bad}", abscissa=bad)
        coeffs = (2.0 / n) * (T @ vals)
        return ChebyshevSeries1D(coeffs=coeffs, interval=cell, n_quad=n)

    cells, failures = [], []
    for j, result in enumerate(parallel_map(_catching(build_cell), range(partition.n_cells))):
        if isinstance(result, Exception):
            cells.append(None)
            failures.append((j, result))
        else:
            cells.append(result)
    return PiecewiseApprox1D(
        partition=partition, cells=cells, orders=[d] * partition.n_cells,
        failures=failures,
    )


def _catching(fn):
    def wrapped(item):
        try:
            return fn(item)
        except Exception as exc:  # noqa: BLE001 - aggregated per cell
            return exc

    return wrapped


def eval_pipc(P: PiecewiseApprox1D, x):
    """Evaluate the piecewise approximant; returns (value, pole_flag)."""
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    idx = P.partition.locate(x_arr)
    vals = np.empty_like(x_arr)
    flags = np.zeros(x_arr.shape, dtype=bool)
    for j in np.unique(idx):
        mask = idx == j
        cell = P.cells[j]
        if cell is None:
            raise CellBuildError(P.failures, partial=P)
        xj = x_arr[mask]
        if isinstance(cell, RationalCheb1D):
            v, fl = eval_rational_1d(cell, xj)
            vals[mask] = v
            flags[mask] = fl
        else:
            vals[mask] = eval_cheb_series(cell, xj)
    if scalar:
        return vals[0], bool(flags[0])
    return vals, flags
