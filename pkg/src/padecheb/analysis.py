"""Error norms over evaluation windows and empirical convergence orders.

Sampling uses the composite-midpoint grid of the window: the L1 norm is
the midpoint rule applied to |f - approx| and the Linf norm is the
maximum over the same grid.  Midpoints that collide with partition nodes
(possible when a cell boundary bisects the window) are nudged inward so
half-open cell ownership is respected.  Pole-flagged samples keep their
values in the norms but are counted separately, so spurious-pole
regressions stay visible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import Interval, sample_function
from .cheb2d import Rect, sample_function_2d
from .exceptions import InvalidArgumentError

__all__ = [
    "ErrorReport",
    "ConvergenceTable",
    "midpoint_grid",
    "error_norms",
    "error_norms_2d",
    "convergence_orders",
]

#: relative inward nudge for samples landing on a cell boundary
BOUNDARY_NUDGE = 1e-12


@dataclass(frozen=True)
class ErrorReport:
    l1: float
    linf: float
    window: object  # Interval or Rect
    samples: str
    pole_count: int


@dataclass(frozen=True)
class ConvergenceTable:
    """Rows of (N, l1_error, order); the first row has no order."""

    rows: tuple


def midpoint_grid(interval: Interval, m: int, avoid=None) -> np.ndarray:
    """Midpoints of m uniform subintervals, nudged off any `avoid` nodes."""
    if m < 1:
        raise InvalidArgumentError("need at least one sample")
    h = interval.width / m
    xs = interval.a + (np.arange(m) + 0.5) * h
    if avoid is not None and len(avoid) > 0:
        nodes = np.asarray(avoid, dtype=float)
        widths = np.diff(nodes)
        wmin = widths.min() if widths.size else interval.width
        shift = BOUNDARY_NUDGE * wmin
        for node in nodes:
            xs[np.abs(xs - node) < shift] += shift
    return xs


def error_norms(
    f, evaluator, window: Interval, m: int, avoid=None
) -> ErrorReport:
    """L1 (midpoint rule) and Linf of f - approx over a 1-D window.

    ``evaluator`` maps an abscissa array to (values, pole_flags).
    """
    xs = midpoint_grid(window, m, avoid)
    vals, flags = evaluator(xs)
    err = np.abs(sample_function(f, xs) - np.asarray(vals, dtype=float))
    h = window.width / m
    return ErrorReport(
        l1=float(h * err.sum()),
        linf=float(err.max()),
        window=window,
        samples=f"{m} midpoints",
        pole_count=int(np.count_nonzero(flags)),
    )


def error_norms_2d(
    f, evaluator, window: Rect, m, avoid_x=None, avoid_y=None
) -> ErrorReport:
    """Tensor-midpoint-grid L1 and Linf over a rectangular window.

    ``evaluator`` maps paired point arrays (x, y) to (values, pole_flags).
    """
    mx, my = m
    xs = midpoint_grid(window.x_interval, mx, avoid_x)
    ys = midpoint_grid(window.y_interval, my, avoid_y)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    vals, flags = evaluator(X.ravel(), Y.ravel())
    exact = sample_function_2d(f, X, Y).ravel()
    err = np.abs(exact - np.asarray(vals, dtype=float))
    cell_area = (window.x_interval.width / mx) * (window.y_interval.width / my)
    return ErrorReport(
        l1=float(cell_area * err.sum()),
        linf=float(err.max()),
        window=window,
        samples=f"{mx}x{my} midpoints",
        pole_count=int(np.count_nonzero(flags)),
    )


def convergence_orders(rows) -> ConvergenceTable:
    """order_k = ln(e_{k-1}/e_k) / ln(N_k/N_{k-1}); first row has none."""
    rows = list(rows)
    Ns = [r[0] for r in rows]
    es = [r[1] for r in rows]
    if any(n2 <= n1 for n1, n2 in zip(Ns, Ns[1:])):
        raise InvalidArgumentError("N values must be strictly increasing")
    if any(e <= 0 for e in es):
        raise InvalidArgumentError("errors must be positive to estimate orders")
    out = [(Ns[0], es[0], None)]
    for (n1, e1), (n2, e2) in zip(rows, rows[1:]):
        out.append((n2, e2, float(np.log(e1 / e2) / np.log(n2 / n1))))
    return ConvergenceTable(rows=tuple(out))
