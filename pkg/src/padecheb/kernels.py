"""Numerical kernel (null-space) extraction for dense real matrices.

The denominator systems assembled elsewhere are short-fat (one more column
than rows), so a nontrivial kernel always exists.  When the numerical rank
is deficient the kernel has dimension > 1 and a single representative must
be picked reproducibly; ``choose_kernel_vector`` pins that choice.

Ordering convention (fixed, documented, deterministic): the basis vectors
are the trailing right-singular vectors of the SVD in their natural LAPACK
order, i.e. by *descending* associated singular value; the last basis
vector is the direction of the smallest singular value.  Each vector's
sign is normalized so its first entry of non-negligible magnitude is
positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidArgumentError, NoKernelError

__all__ = ["KernelResult", "kernel_basis", "choose_kernel_vector"]


@dataclass(frozen=True)
class KernelResult:
    """Orthonormal kernel basis (columns of ``basis``) of a dense matrix."""

    basis: np.ndarray  # shape (cols, dim); columns are unit vectors
    numerical_rank: int
    rank_tolerance: float

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def _fix_signs(basis: np.ndarray) -> np.ndarray:
    # first entry with magnitude above a small absolute floor made positive
    for j in range(basis.shape[1]):
        v = basis[:, j]
        idx = np.flatnonzero(np.abs(v) > 1e-12)
        if idx.size and v[idx[0]] < 0:
            basis[:, j] = -v
    return basis


def kernel_basis(A, tol: float | None = None) -> KernelResult:
    """Orthonormal basis of {v : ||A v|| <= tol_eff * ||A||}.

    ``tol_eff`` defaults to max(rows, cols) * machine epsilon * (largest
    singular value), the standard numerical-rank rule; pass ``tol`` to
    override it for experiments.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    rows, cols = A.shape
    if cols == 0:
        raise InvalidArgumentError("matrix must have at least one column")
    if not np.all(np.isfinite(A)):
        raise InvalidArgumentError("matrix entries must be finite")
    _, s, Vt = np.linalg.svd(A, full_matrices=True)
    smax = s[0] if s.size else 0.0
    tol_eff = tol if tol is not None else max(rows, cols) * np.finfo(float).eps * smax
    rank = int(np.count_nonzero(s > tol_eff))
    basis = _fix_signs(Vt[rank:].T.copy())
    return KernelResult(basis=basis, numerical_rank=rank, rank_tolerance=float(tol_eff))


def choose_kernel_vector(k: KernelResult) -> np.ndarray:
    """Last basis vector under the documented ordering (smallest singular value).

    Raises :class:`NoKernelError` on an empty basis (full column rank),
    which callers report as an ill-posed denominator system.
    """
    if k.dim == 0:
        raise NoKernelError("matrix has full column rank; kernel is trivial")
    return k.basis[:, -1].copy()
