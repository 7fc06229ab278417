"""Index selection strategies: DEIM, L-DEIM and leverage-score sampling.

All selectors return distinct zero-based row indices of the input basis
matrix.  Every argmax breaks ties by lowest index, so results are fully
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
import warnings

import numpy as np

from .linalg import RankDeficiencyError, as_matrix

__all__ = [
    "Method",
    "SelectionResult",
    "deim_select",
    "ldeim_select",
    "leverage_scores",
    "leverage_select",
    "deim_growth_bound",
]


class Method(Enum):
    DEIM = "deim"
    LDEIM = "ldeim"
    LEVERAGE = "leverage"


@dataclass(frozen=True)
class SelectionResult:
    indices: np.ndarray
    method: Method = field(default=Method.DEIM)

    def __post_init__(self):
        ind = np.asarray(self.indices, dtype=np.intp)
        if len(np.unique(ind)) != len(ind):
            raise ValueError(f"selected indices are not distinct: {ind}")
        object.__setattr__(self, "indices", ind)

    def __len__(self):
        return len(self.indices)


def deim_select(v):
    """Greedy DEIM pivoting over the columns of ``v`` (m-by-k, k <= m).

    Each step picks the largest-magnitude entry of the residual of the next
    column after interpolatory projection onto the already-pivoted columns.
    """
    v = as_matrix(v, "basis")
    m, k = v.shape
    if k > m:
        raise ValueError(f"deim_select needs cols <= rows, got {m}x{k}")
    p = np.empty(k, dtype=np.intp)
    p[0] = int(np.argmax(np.abs(v[:, 0])))
    if v[p[0], 0] == 0.0:
        raise RankDeficiencyError("first basis column is identically zero")
    for j in range(1, k):
        col = v[:, j]
        c = np.linalg.solve(v[p[:j]][:, :j], col[p[:j]])
        r = col - v[:, :j] @ c
        p[j] = int(np.argmax(np.abs(r)))
        if r[p[j]] == 0.0:
            raise RankDeficiencyError(
                f"zero pivot residual at step {j}: basis is rank deficient"
            )
    return SelectionResult(p, Method.DEIM)


def ldeim_select(v, k):
    """Hybrid L-DEIM selection of ``k`` indices from an m-by-khat basis.

    The first khat indices come from DEIM with in-place deflation of the
    next column only; the remaining k - khat are the largest squared row
    norms of the deflated basis, excluding already-chosen rows.
    """
    v = as_matrix(v, "basis").copy()
    m, khat = v.shape
    if khat > k:
        raise ValueError(f"basis has {khat} columns but target rank is {k}")
    if k > m:
        raise ValueError(f"cannot select {k} indices from {m} rows")
    p = np.empty(khat, dtype=np.intp)
    for j in range(khat):
        p[j] = int(np.argmax(np.abs(v[:, j])))
        if v[p[j], j] == 0.0:
            raise RankDeficiencyError(f"zero pivot at L-DEIM step {j}")
        if j + 1 < khat:
            c = np.linalg.solve(v[p[: j + 1]][:, : j + 1], v[p[: j + 1], j + 1])
            v[:, j + 1] -= v[:, : j + 1] @ c
    if k > khat:
        scores = np.einsum("ij,ij->i", v, v)
        scores[p] = -np.inf
        # stable sort on (-score, index) keeps ties at the lowest index
        order = np.argsort(-scores, kind="stable")
        p = np.concatenate([p, order[: k - khat]])
    return SelectionResult(p, Method.LDEIM)


def leverage_scores(v):
    """Squared row norms of ``v``; sums to the column count when orthonormal."""
    v = as_matrix(v, "basis")
    gram_err = np.linalg.norm(v.T @ v - np.eye(v.shape[1]))
    if gram_err > 1e-8:
        warnings.warn(
            f"basis columns deviate from orthonormality by {gram_err:.2e}",
            stacklevel=2,
        )
    return np.einsum("ij,ij->i", v, v)


def leverage_select(v, k):
    """Indices of the ``k`` largest leverage scores, ties broken by lowest index."""
    v = as_matrix(v, "basis")
    if k > v.shape[0]:
        raise ValueError(f"cannot select {k} of {v.shape[0]} rows")
    scores = leverage_scores(v)
    order = np.argsort(-scores, kind="stable")
    return SelectionResult(order[:k], Method.LEVERAGE)


def deim_growth_bound(m, k):
    """Diagnostic growth bound sqrt(m*k/3) * 2**k on the pivoted-block inverse."""
    return np.sqrt(m * k / 3.0) * 2.0**k
