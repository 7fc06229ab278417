"""Dense linear-algebra kernels shared by every decomposition routine.

All matrices are real, dense, row-major ``numpy`` arrays of float64.  The
functions here are deterministic and pure; randomness only enters through
the sketching layer.
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "DimensionError",
    "RankDeficiencyError",
    "as_matrix",
    "as_index_list",
    "qr_thin",
    "svd_thin",
    "lstsq_solve",
    "two_norm",
    "select_columns",
    "select_rows",
    "complete_orthonormal",
]


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


class RankDeficiencyError(np.linalg.LinAlgError):
    """Raised when an operation requires full rank and the input lacks it."""


def as_matrix(a, name="matrix"):
    """Validate and return ``a`` as a 2-d float64 array with finite entries."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be 2-dimensional, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def as_index_list(idx, dim, name="indices"):
    """Validate an ordered list of distinct zero-based indices below ``dim``."""
    ind = np.asarray(idx, dtype=np.intp).ravel()
    if ind.size and (ind.min() < 0 or ind.max() >= dim):
        raise IndexError(f"{name} out of range for dimension {dim}: {ind}")
    if len(np.unique(ind)) != len(ind):
        raise ValueError(f"{name} contains duplicates: {ind}")
    return ind


def qr_thin(a):
    """Thin QR factorization A = QR with Q m-by-n orthonormal, R upper triangular.

    Requires rows >= cols.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        raise DimensionError(f"qr_thin needs rows >= cols, got {m}x{n}")
    q, r = np.linalg.qr(a, mode="reduced")
    return q, r


def svd_thin(a):
    """Thin SVD: returns (U, s, V) with A = U @ diag(s) @ V.T, s non-increasing."""
    a = as_matrix(a)
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    return u, s, vt.T


def lstsq_solve(a, b):
    """Minimum-norm least-squares solution X of A X ~= B."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape[0] != b.shape[0]:
        raise DimensionError(
            f"lstsq_solve: A has {a.shape[0]} rows but B has {b.shape[0]}"
        )
    x, _, _, _ = np.linalg.lstsq(a, b, rcond=None)
    return x


def two_norm(a):
    """Spectral norm (largest singular value)."""
    a = as_matrix(a)
    if a.size == 0 or not a.any():
        return 0.0
    return float(np.linalg.norm(a, 2))


def select_columns(a, idx):
    """Copy of the columns of ``a`` addressed by ``idx``, in ``idx`` order."""
    a = as_matrix(a)
    ind = as_index_list(idx, a.shape[1], "column indices")
    return a[:, ind].copy()


def select_rows(a, idx):
    """Copy of the rows of ``a`` addressed by ``idx``, in ``idx`` order."""
    a = as_matrix(a)
    ind = as_index_list(idx, a.shape[0], "row indices")
    return a[ind, :].copy()


def complete_orthonormal(q):
    """Extend an m-by-n orthonormal-column matrix to a full m-by-m orthogonal one.

    The first n columns of the result equal ``q`` exactly; the remaining
    columns are a deterministic orthonormal basis of the complement.
    """
    q = as_matrix(q)
    m, n = q.shape
    if m == n:
        return q
    full, r = np.linalg.qr(q, mode="complete")
    # qr may flip column signs relative to q; undo so the leading block is q.
    signs = np.sign(np.diag(r[:n, :n]))
    signs[signs == 0] = 1.0
    full[:, :n] *= signs
    return full
