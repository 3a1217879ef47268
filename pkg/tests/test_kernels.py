import numpy as np
import pytest

from padecheb import NoKernelError, choose_kernel_vector, kernel_basis


def test_simple_kernel():
    A = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    res = kernel_basis(A)
    assert res.numerical_rank == 2
    assert res.basis.shape == (3, 1)
    assert np.allclose(np.abs(res.basis[:, 0]), [0, 0, 1], atol=1e-14)
    v = choose_kernel_vector(res)
    assert v[2] > 0  # sign convention: first significant entry positive


def test_full_rank_square_has_empty_kernel():
    rng = np.random.default_rng(0)
    A = rng.normal(size=(5, 5)) + 5 * np.eye(5)
    res = kernel_basis(A)
    assert res.numerical_rank == 5
    assert res.basis.shape == (5, 0)
    with pytest.raises(NoKernelError):
        choose_kernel_vector(res)


def test_zero_matrix_kernel_is_identity_like():
    res = kernel_basis(np.zeros((3, 4)))
    assert res.numerical_rank == 0
    assert res.basis.shape == (4, 4)
    # orthonormal, and the chosen vector is the last column
    assert np.allclose(res.basis.T @ res.basis, np.eye(4), atol=1e-14)
    v = choose_kernel_vector(res)
    assert np.allclose(v, res.basis[:, -1])


def test_kernel_columns_annihilated():
    rng = np.random.default_rng(21)
    for _ in range(25):
        m = int(rng.integers(2, 8))
        n = m + int(rng.integers(1, 4))
        rank = int(rng.integers(1, m + 1))
        A = rng.normal(size=(m, rank)) @ rng.normal(size=(rank, n))
        res = kernel_basis(A)
        assert res.numerical_rank == rank
        assert res.basis.shape == (n, n - rank)
        assert np.max(np.abs(A @ res.basis)) < 1e-10 * np.linalg.norm(A)


def test_explicit_tolerance_overrides_default():
    A = np.diag([1.0, 1e-9, 1e-15])[:2, :]  # 2x3
    strict = kernel_basis(A, tol=1e-12)
    loose = kernel_basis(A, tol=1e-6)
    assert strict.numerical_rank == 2
    assert loose.numerical_rank == 1
    assert loose.basis.shape == (3, 2)
    assert strict.rank_tolerance == 1e-12


def test_rank_tolerance_reported():
    A = np.eye(4)
    res = kernel_basis(A)
    assert res.rank_tolerance == pytest.approx(4 * np.finfo(float).eps, rel=1e-6)
