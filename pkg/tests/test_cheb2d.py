import numpy as np
import pytest

from padecheb import (
    ChebyshevSeries2D,
    Interval,
    OutOfDomainError,
    Partition2D,
    Rect,
    build_pi2dc,
    cheb_coeffs_2d,
    eval_cheb_series_2d,
    eval_pi2d,
    uniform_partition,
)
from padecheb.cheb2d import epsilon_factors, eval_tensor_sum

UNIT_SQ = Rect(Interval(-1, 1), Interval(-1, 1))


def test_epsilon_factors_pattern():
    eps = epsilon_factors(2, 3)
    assert eps[0, 0] == 1.0
    assert np.all(eps[0, 1:] == 2.0)
    assert np.all(eps[1:, 0] == 2.0)
    assert np.all(eps[1:, 1:] == 4.0)


def test_monomial_coefficients_frozen():
    # x^2 y = ((T0 + T2)/2)(x) * T1(y), so the baked-in coefficients are
    # c_{0,1} = c_{2,1} = 1/2 and everything else zero.
    ser = cheb_coeffs_2d(lambda x, y: x**2 * y, UNIT_SQ, (3, 3), (16, 16))
    expected = np.zeros((4, 4))
    expected[0, 1] = 0.5
    expected[2, 1] = 0.5
    assert np.allclose(ser.coeffs, expected, atol=1e-13)


def test_constant_coefficient_not_halved():
    ser = cheb_coeffs_2d(lambda x, y: 3.0 + 0 * x, UNIT_SQ, (2, 2), (8, 8))
    assert ser.coeffs[0, 0] == pytest.approx(3.0, abs=1e-13)
    assert np.max(np.abs(ser.coeffs.ravel()[1:])) < 1e-13


def test_tensor_sum_matches_loop():
    rng = np.random.default_rng(9)
    C = rng.normal(size=(4, 5))
    tx = rng.uniform(-1, 1, 30)
    ty = rng.uniform(-1, 1, 30)
    direct = np.zeros(30)
    for i in range(4):
        for j in range(5):
            direct += C[i, j] * np.cos(i * np.arccos(tx)) * np.cos(j * np.arccos(ty))
    assert np.allclose(eval_tensor_sum(C, tx, ty), direct, atol=1e-12)


def test_polynomial_reproduction_on_rectangle():
    rect = Rect(Interval(0, 2), Interval(-1, 3))
    f = lambda x, y: 1 + x * y + 0.5 * x**2 - y**2  # noqa: E731
    ser = cheb_coeffs_2d(f, rect, (4, 4), (32, 32))
    gx = np.linspace(0, 2, 21)
    gy = np.linspace(-1, 3, 21)
    X, Y = np.meshgrid(gx, gy, indexing="ij")
    vals = eval_cheb_series_2d(ser, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals - f(X, Y).ravel())) < 1e-12


def test_eval_outside_rect_raises():
    ser = cheb_coeffs_2d(lambda x, y: x + y, UNIT_SQ, (2, 2), (8, 8))
    with pytest.raises(OutOfDomainError):
        eval_cheb_series_2d(ser, np.array([0.0]), np.array([1.5]))


def test_series_invariants():
    with pytest.raises(Exception):
        ChebyshevSeries2D(coeffs=np.array([[np.nan]]), rect=UNIT_SQ, n_quad=(4, 4))


def test_piecewise_2d_smooth():
    part = Partition2D(
        uniform_partition(Interval(-1, 1), 3),
        uniform_partition(Interval(-1, 1), 2),
    )
    f = lambda x, y: np.sin(2 * x) * np.cos(y)  # noqa: E731
    approx = build_pi2dc(f, part, (12, 12), (24, 24))
    assert not approx.failures
    gx = np.linspace(-1, 1, 41)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    vals, flags = eval_pi2d(approx, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals - f(X, Y).ravel())) < 1e-10
    assert not flags.any()


def test_piecewise_2d_cell_ownership():
    # f jumps along x = 0, which is a partition node: the cell to the
    # right owns the line, so the approximation is exact everywhere
    part = Partition2D(
        uniform_partition(Interval(-1, 1), 2),
        uniform_partition(Interval(-1, 1), 1),
    )
    f = lambda x, y: np.where(x < 0, -1.0, 1.0) + 0 * y  # noqa: E731
    approx = build_pi2dc(f, part, (4, 4), (8, 8))
    vals, _ = eval_pi2d(approx, np.array([-0.3, 0.0, 0.3]), np.zeros(3))
    assert np.allclose(vals, [-1.0, 1.0, 1.0], atol=1e-12)
