"""Plain DEIM-based CUR of a single matrix, used as the baseline method."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, select_columns, select_rows, svd_thin
from .gcur import middle_matrix
from .selection import Method, deim_select, ldeim_select

__all__ = ["CurFactors", "deim_cur"]


@dataclass(frozen=True)
class CurFactors:
    p: np.ndarray
    s: np.ndarray
    m: np.ndarray
    k: int

    def reconstruct(self, a):
        return select_columns(a, self.p) @ self.m @ select_rows(a, self.s)


def deim_cur(a, k, method=Method.DEIM, khat=None):
    """Rank-k CUR with indices from DEIM (or L-DEIM) on the singular vectors."""
    a = as_matrix(a)
    u, _, v = svd_thin(a)
    if method is Method.DEIM:
        p = deim_select(v[:, :k]).indices
        s = deim_select(u[:, :k]).indices
    else:
        if khat is None:
            khat = max(1, -(-k // 2))
        p = ldeim_select(v[:, :khat], k).indices
        s = ldeim_select(u[:, :khat], k).indices
    return CurFactors(p=p, s=s, m=middle_matrix(a, p, s), k=k)
