"""Matrix Market and dense CSV readers/writers."""
from __future__ import annotations

import numpy as np
import scipy.io
import scipy.sparse

from .linalg import as_matrix

__all__ = ["read_matrix", "write_matrix", "read_csv", "write_csv"]


def read_matrix(path):
    """Read a Matrix Market file (coordinate or array format) as a dense array."""
    m = scipy.io.mmread(path)
    if scipy.sparse.issparse(m):
        m = m.toarray()
    return as_matrix(m, str(path))


def write_matrix(path, a):
    """Write a dense matrix in Matrix Market array format."""
    scipy.io.mmwrite(path, as_matrix(a))


def read_csv(path):
    """Read a dense matrix from CSV: one row per line, comma-separated."""
    return as_matrix(np.loadtxt(path, delimiter=",", ndmin=2), str(path))


def write_csv(path, a):
    """Write a dense matrix as CSV with '.' decimal separator."""
    np.savetxt(path, as_matrix(a), delimiter=",")
