"""Built-in test-function registry for experiments and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import Interval
from .cheb2d import Rect
from .exceptions import InvalidArgumentError

__all__ = ["FunctionSpec", "registry", "get_function"]


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    arity: int
    fn: object
    domain: object  # Interval (arity 1) or Rect (arity 2)
    description: str


def jump_root_1d(x):
    """Piecewise: x^3, then x^2 + 1, then 1.16 - sqrt(x - 0.4).

    A jump discontinuity at x = -0.4 and a square-root (point)
    singularity at x = 0.4.
    """
    x = np.asarray(x, dtype=float)
    return np.piecewise(
        x,
        [x < -0.4, (x >= -0.4) & (x < 0.4), x >= 0.4],
        [lambda t: t**3,
         lambda t: t**2 + 1.0,
         lambda t: 1.16 - np.sqrt(t - 0.4)],
    )


def sign4xy(x, y):
    """sign(4xy): jumps along both coordinate axes."""
    return np.sign(4.0 * np.asarray(x, dtype=float) * np.asarray(y, dtype=float))


def sod_like_2d(x, y):
    """Shock-tube-like profile in x, constant in y."""
    x = np.asarray(x, dtype=float)
    vals = np.piecewise(
        x,
        [x < -0.4, (x >= -0.4) & (x < 0.0), (x >= 0.0) & (x < 0.4), x >= 0.4],
        [1.0,
         lambda t: t**2 - (17.0 / 20.0) * t + 0.5,
         0.5,
         0.0],
    )
    return vals + 0.0 * np.asarray(y, dtype=float)


def exp1d(x):
    return np.exp(np.asarray(x, dtype=float))


def runge1d(x):
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 25.0 * x * x)


_UNIT = Interval(-1.0, 1.0)
_UNIT_SQ = Rect(_UNIT, _UNIT)

_REGISTRY = {
    spec.name: spec
    for spec in [
        FunctionSpec("jump-root-1d", 1, jump_root_1d, _UNIT,
                     "jump at -0.4, square-root singularity at 0.4"),
        FunctionSpec("sign4xy", 2, sign4xy, _UNIT_SQ,
                     "sign(4xy) on the unit square"),
        FunctionSpec("sod-like-2d", 2, sod_like_2d, _UNIT_SQ,
                     "shock-tube-like x-profile, constant in y"),
        FunctionSpec("exp1d", 1, exp1d, _UNIT, "smooth control: exp(x)"),
        FunctionSpec("runge1d", 1, runge1d, _UNIT,
                     "smooth control: 1/(1 + 25 x^2)"),
    ]
}


def registry() -> list:
    """All built-in test functions, in registration order."""
    return list(_REGISTRY.values())


def get_function(name: str) -> FunctionSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(_REGISTRY)
        raise InvalidArgumentError(f"unknown function {name!r}; known: {known}") from None
