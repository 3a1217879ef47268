"""Piecewise 2D Pade-Chebyshev on a shock-tube-like profile.

The target is piecewise smooth in x (four bands: constant, quadratic,
constant, constant) and constant in y, mimicking a 1D Riemann-problem
density profile embedded in 2D.  A partition that is fine in x and
coarse in y resolves the band structure; errors concentrate in the
cells whose interior contains a band edge.
"""

import numpy as np

from padecheb import (
    Interval,
    PadeOrder2D,
    Partition2D,
    Rect,
    build_pi2dpc,
    error_norms_2d,
    eval_pi2d,
    uniform_partition,
)
from padecheb.functions import sod_like_2d

UNIT = Interval(-1.0, 1.0)
SQUARE = Rect(UNIT, UNIT)

for Nx in (9, 27):
    px = uniform_partition(UNIT, Nx)
    py = uniform_partition(UNIT, 3)
    part = Partition2D(px, py)
    approx = build_pi2dpc(sod_like_2d, part, PadeOrder2D((7, 7), (2, 2)), (24, 24))
    assert not approx.failures
    ev = lambda x, y: eval_pi2d(approx, x, y)  # noqa: E731
    glob = error_norms_2d(
        sod_like_2d, ev, SQUARE, (256, 64), px.nodes, py.nodes
    )
    # a window clear of the band edges at -0.4, 0, 0.4
    smooth = error_norms_2d(
        sod_like_2d, ev,
        Rect(Interval(0.5, 0.9), Interval(-0.5, 0.5)),
        (64, 64), px.nodes, py.nodes,
    )
    print(
        f"Nx = {Nx:>2}: global L1 = {glob.l1:.3e}   "
        f"smooth-window Linf = {smooth.linf:.3e}   poles = {glob.pole_count}"
    )
