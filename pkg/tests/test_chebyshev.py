import numpy as np
import pytest

from padecheb import (
    ChebyshevSeries1D,
    Interval,
    InvalidArgumentError,
    OutOfDomainError,
    QuadratureResolutionWarning,
    SamplingError,
    affine_to_domain,
    affine_to_reference,
    cheb_coeffs_1d,
    cheb_points,
    chebyshev_basis,
    eval_cheb_plain,
    eval_cheb_series,
)


def test_cheb_points_are_cos_roots():
    t = cheb_points(5)
    expected = np.cos((np.arange(5) + 0.5) * np.pi / 5)
    assert np.allclose(t, expected, atol=1e-15)
    # roots of T_5
    assert np.max(np.abs(np.cos(5 * np.arccos(t)))) < 1e-13


def test_cheb_points_validation():
    with pytest.raises(InvalidArgumentError):
        cheb_points(0)


def test_interval_validation():
    with pytest.raises(InvalidArgumentError):
        Interval(1.0, 1.0)
    with pytest.raises(InvalidArgumentError):
        Interval(2.0, -1.0)


def test_affine_maps_roundtrip():
    iv = Interval(0.3, 2.7)
    t = np.linspace(-1, 1, 17)
    x = affine_to_domain(iv, t)
    assert x[0] == pytest.approx(0.3)
    assert x[-1] == pytest.approx(2.7)
    back = affine_to_reference(iv, x)
    assert np.allclose(back, t, atol=1e-14)


def test_basis_matches_cosine_definition():
    rng = np.random.default_rng(3)
    t = rng.uniform(-1, 1, 40)
    T = chebyshev_basis(6, t)
    theta = np.arccos(t)
    for k in range(7):
        assert np.allclose(T[k], np.cos(k * theta), atol=1e-12)


def test_exp_coefficients_against_bessel():
    # exp(x) = I_0(1) + 2 sum I_k(1) T_k(x); with the halved-first-term
    # storage convention every c_k equals 2 I_k(1).
    frozen = [
        2.532131755504017e+00,
        1.130318207984970e+00,
        2.714953395340766e-01,
        4.433684984866381e-02,
        5.474240442093733e-03,
    ]
    ser = cheb_coeffs_1d(np.exp, Interval(-1, 1), 8, 64)
    assert np.allclose(ser.coeffs[:5], frozen, atol=1e-13)


def test_runge_coefficients_frozen():
    ser = cheb_coeffs_1d(lambda x: 1 / (1 + 25 * x * x), Interval(-1, 1), 6, 400)
    assert ser.coeffs[0] == pytest.approx(3.922322702763680e-01, abs=1e-13)
    assert ser.coeffs[2] == pytest.approx(-2.636108518984775e-01, abs=1e-13)
    assert ser.coeffs[4] == pytest.approx(1.771671698243433e-01, abs=1e-13)
    # odd coefficients vanish for an even function
    assert abs(ser.coeffs[1]) < 1e-15
    assert abs(ser.coeffs[3]) < 1e-15


def test_polynomial_reproduced_exactly():
    rng = np.random.default_rng(11)
    for _ in range(10):
        coef = rng.normal(size=5)
        iv = Interval(*np.sort(rng.uniform(-3, 3, 2)))
        f = lambda x: np.polyval(coef, x)  # noqa: E731
        ser = cheb_coeffs_1d(f, iv, 6, 32)
        x = np.linspace(iv.a, iv.b, 101)
        assert np.max(np.abs(eval_cheb_series(ser, x) - f(x))) < 1e-11 * (
            1 + np.max(np.abs(f(x)))
        )


def test_quadrature_warning_when_underresolved():
    with pytest.warns(QuadratureResolutionWarning):
        cheb_coeffs_1d(np.exp, Interval(-1, 1), 10, 8)


def test_nonfinite_sample_raises():
    with np.errstate(invalid="ignore"):
        with pytest.raises(SamplingError):
            cheb_coeffs_1d(lambda x: np.sqrt(x), Interval(-2, -1), 4, 16)


def test_eval_outside_domain_raises():
    ser = cheb_coeffs_1d(np.exp, Interval(0, 1), 4, 16)
    with pytest.raises(OutOfDomainError):
        eval_cheb_series(ser, np.array([1.5]))


def test_plain_sum_has_no_halving():
    # coeffs (1, 0) under the plain convention is the constant 1, while the
    # series convention reads the same storage as 1/2.
    t = np.linspace(-1, 1, 7)
    assert np.allclose(eval_cheb_plain(np.array([1.0, 0.0]), t), 1.0)
    ser = ChebyshevSeries1D(coeffs=np.array([1.0, 0.0]), interval=Interval(-1, 1), n_quad=2)
    assert np.allclose(eval_cheb_series(ser, t), 0.5)


def test_clenshaw_matches_direct_sum():
    rng = np.random.default_rng(7)
    for _ in range(20):
        deg = rng.integers(1, 30)
        c = rng.normal(size=deg + 1)
        t = rng.uniform(-1, 1, 33)
        direct = chebyshev_basis(deg, t).T @ c
        assert np.allclose(eval_cheb_plain(c, t), direct, atol=1e-11)
