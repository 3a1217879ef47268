"""Univariate Chebyshev series vs Maehly Pade-Chebyshev on smooth targets.

Two quick experiments:

1. A function that is exactly rational, (1 + 0.3x)/(1 + 0.5x), is
   recovered to machine precision by the order-(1,1) approximant.
2. The Runge function 1/(1 + 25x^2) shows the rational form extracting
   far more accuracy than a truncated series with the same coefficient
   budget.
"""

import numpy as np

from padecheb import (
    Interval,
    PadeOrder1D,
    build_pade_1d,
    cheb_coeffs_1d,
    eval_cheb_series,
    eval_rational_1d,
    pade_from_series,
)
from padecheb.chebyshev import ChebyshevSeries1D

UNIT = Interval(-1.0, 1.0)
x = np.linspace(-1, 1, 2001)

print("-- exact rational recovery --")
f = lambda t: (1 + 0.3 * t) / (1 + 0.5 * t)  # noqa: E731
rat = build_pade_1d(f, UNIT, PadeOrder1D(1, 1), 64)
vals, _ = eval_rational_1d(rat, x)
print(f"order (1,1):  max |R - f| = {np.max(np.abs(vals - f(x))):.3e}")
print(f"denominator coefficients (q0-normalized): {rat.q}")

print()
print("-- Runge function, series vs rational --")
g = lambda t: 1.0 / (1 + 25 * t * t)  # noqa: E731
for np_, nq in [(2, 2), (4, 4), (8, 8)]:
    order = PadeOrder1D(np_, nq)
    d = np_ + 2 * nq  # the coefficient budget the rational construction uses
    ser = cheb_coeffs_1d(g, UNIT, d, 400)
    rat = pade_from_series(ser, order)
    rv, _ = eval_rational_1d(rat, x)
    trunc = ChebyshevSeries1D(coeffs=ser.coeffs[: d + 1], interval=UNIT, n_quad=400)
    sv = eval_cheb_series(trunc, x)
    print(
        f"order ({np_},{nq}) / degree {d}:  "
        f"series Linf = {np.max(np.abs(sv - g(x))):.3e}   "
        f"rational Linf = {np.max(np.abs(rv - g(x))):.3e}"
    )
