import numpy as np
import pytest

from padecheb import (
    Interval,
    InvalidArgumentError,
    PadeOrder2D,
    Partition2D,
    Rect,
    RationalCheb2D,
    assemble_denominator_system_2d,
    build_pade_2d,
    build_pi2dpc,
    cheb_coeffs_2d,
    compute_numerator_2d,
    eval_cheb_series_2d,
    eval_pi2d,
    eval_rational_2d,
    pade_2d_from_series,
    solve_denominator_2d,
    uniform_partition,
)
from padecheb.cheb2d import ChebyshevSeries2D

UNIT_SQ = Rect(Interval(-1, 1), Interval(-1, 1))


def _series(coeffs):
    return ChebyshevSeries2D(
        coeffs=np.asarray(coeffs, dtype=float), rect=UNIT_SQ,
        n_quad=np.asarray(coeffs).shape,
    )


def test_order_validation():
    with pytest.raises(InvalidArgumentError):
        PadeOrder2D((1, 3), (2, 2))
    with pytest.raises(InvalidArgumentError):
        PadeOrder2D((2, 2), (0, 1))


def test_system_shape_and_row_count():
    # the far-corner equation is dropped, leaving one fewer row than
    # unknowns, so a kernel vector always exists
    order = PadeOrder2D((2, 3), (2, 1))
    dx, dy = order.quad_degree
    rng = np.random.default_rng(1)
    ser = _series(rng.normal(size=(dx + 1, dy + 1)))
    A = assemble_denominator_system_2d(ser, order)
    nq1, nq2 = order.nq
    assert A.shape == ((nq1 + 1) * (nq2 + 1) - 1, (nq1 + 1) * (nq2 + 1))


def test_assembly_matches_direct_four_term_sum():
    rng = np.random.default_rng(23)
    for _ in range(50):
        nq1 = int(rng.integers(1, 4))
        nq2 = int(rng.integers(1, 4))
        np1 = nq1 + int(rng.integers(0, 3))
        np2 = nq2 + int(rng.integers(0, 3))
        order = PadeOrder2D((np1, np2), (nq1, nq2))
        dx, dy = order.quad_degree
        c = rng.normal(size=(dx + 1, dy + 1))
        ser = _series(c)
        A = assemble_denominator_system_2d(ser, order)
        q = rng.normal(size=(nq1 + 1) * (nq2 + 1))
        Q = q.reshape(nq1 + 1, nq2 + 1)

        def cc(i, j):
            if 0 <= i <= dx and 0 <= j <= dy:
                return c[i, j]
            return 0.0

        row = 0
        for i in range(np1 + 1, np1 + nq1 + 2):
            for j in range(np2 + 1, np2 + nq2 + 2):
                if i == np1 + nq1 + 1 and j == np2 + nq2 + 1:
                    continue
                direct = sum(
                    (cc(i - r, j - s) + cc(i - r, j + s)
                     + cc(i + r, j - s) + cc(i + r, j + s)) * Q[r, s]
                    for r in range(nq1 + 1) for s in range(nq2 + 1)
                )
                assert A[row] @ q == pytest.approx(direct, abs=1e-13)
                row += 1
        assert row == A.shape[0]


def test_constant_denominator_reduces_to_series():
    rng = np.random.default_rng(2)
    gx = np.linspace(-1, 1, 32)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    for _ in range(5):
        a = rng.normal(size=3)
        f = lambda x, y: a[0] + a[1] * np.sin(x + y) + a[2] * x * y  # noqa: E731
        order = PadeOrder2D((5, 5), (2, 2))
        ser = cheb_coeffs_2d(f, UNIT_SQ, order.quad_degree, (32, 32))
        Q = np.zeros((3, 3))
        Q[0, 0] = 1.0
        P = compute_numerator_2d(ser, Q, order)
        rat = RationalCheb2D(P=P, Q=Q, rect=UNIT_SQ)
        v1, flags = eval_rational_2d(rat, X.ravel(), Y.ravel())
        trunc = ChebyshevSeries2D(
            coeffs=ser.coeffs[:6, :6], rect=UNIT_SQ, n_quad=ser.n_quad
        )
        v2 = eval_cheb_series_2d(trunc, X.ravel(), Y.ravel())
        assert not flags.any()
        assert np.max(np.abs(v1 - v2)) < 1e-13


def test_constant_function_gives_constant_approximant():
    f = lambda x, y: 1.0 + 0 * x + 0 * y  # noqa: E731
    rat = build_pade_2d(f, UNIT_SQ, PadeOrder2D((2, 2), (1, 1)), (16, 16))
    gx = np.linspace(-1, 1, 25)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    vals, flags = eval_rational_2d(rat, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals[~flags] - 1.0)) < 1e-10


def test_separable_rational_recovery():
    f = lambda x, y: (1 + 0.3 * x) * (1 + 0.2 * y) / ((1 + 0.4 * x) * (1 + 0.3 * y))  # noqa: E731
    rat = build_pade_2d(f, UNIT_SQ, PadeOrder2D((1, 1), (1, 1)), (64, 64))
    # Q should be the outer product (1, 0.4) x (1, 0.3) after normalization
    assert np.allclose(rat.Q, np.outer([1.0, 0.4], [1.0, 0.3]), atol=1e-9)
    gx = np.linspace(-1, 1, 50)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    vals, flags = eval_rational_2d(rat, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals - f(X, Y).ravel())) < 1e-7
    assert not flags.any()


def test_nonseparable_rational_recovery():
    f = lambda x, y: (1 + 0.2 * x + 0.1 * y) / (1 + 0.3 * x + 0.2 * y + 0.1 * x * y)  # noqa: E731
    rat = build_pade_2d(f, UNIT_SQ, PadeOrder2D((1, 1), (1, 1)), (64, 64))
    gx = np.linspace(-1, 1, 40)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    vals, _ = eval_rational_2d(rat, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals - f(X, Y).ravel())) < 1e-7


def test_solve_denominator_normalization():
    # a system whose kernel has q00 bounded away from zero normalizes to
    # q00 = 1 exactly
    f = lambda x, y: (1 + 0.2 * x * y) / (1 + 0.3 * x + 0.2 * y + 0.1 * x * y)  # noqa: E731
    order = PadeOrder2D((1, 1), (1, 1))
    ser = cheb_coeffs_2d(f, UNIT_SQ, order.quad_degree, (64, 64))
    A = assemble_denominator_system_2d(ser, order)
    Q = solve_denominator_2d(A, order)
    assert Q[0, 0] == pytest.approx(1.0)


def test_pole_flag_2d():
    Q = np.array([[0.0, 1.0]])  # Q(x, y) = T_1(y) = y
    P = np.array([[1.0]])
    rat = RationalCheb2D(P=P, Q=Q, rect=UNIT_SQ)
    vals, flags = eval_rational_2d(rat, np.array([0.2, 0.2]), np.array([0.0, 0.5]))
    assert flags[0] and not flags[1]
    assert vals[1] == pytest.approx(2.0)


def test_pi2dpc_smooth_cells():
    part = Partition2D(
        uniform_partition(Interval(-1, 1), 2),
        uniform_partition(Interval(-1, 1), 2),
    )
    f = lambda x, y: np.exp(x) * np.cos(2 * y)  # noqa: E731
    approx = build_pi2dpc(f, part, PadeOrder2D((8, 8), (2, 2)), (32, 32))
    assert not approx.failures
    gx = np.linspace(-1, 1, 31)
    X, Y = np.meshgrid(gx, gx, indexing="ij")
    vals, flags = eval_pi2d(approx, X.ravel(), Y.ravel())
    assert np.max(np.abs(vals[~flags] - f(X, Y).ravel()[~flags])) < 1e-9


def test_quadrature_degree_covers_assembly():
    order = PadeOrder2D((3, 2), (2, 1))
    assert order.quad_degree == (3 + 2 * 2 + 1, 2 + 2 * 1 + 1)
