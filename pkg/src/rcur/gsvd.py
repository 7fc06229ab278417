"""Generalized SVD of a matrix pair (Van Loan form) and its randomized variant.

The pair (A, B) with A m-by-n, B d-by-n is factored as

    A = U diag(gamma) Y^T,    B = V diag(beta) Y^T,

with U, V orthonormal columns, Y n-by-n nonsingular, gamma_i^2 + beta_i^2 = 1
and gamma_i / beta_i non-increasing.  The kernel route is a thin QR of the
stacked matrix [B; A] followed by an SVD of the A-block of the orthonormal
factor (a CS-decomposition step), which costs O((m+d) n^2).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DimensionError,
    RankDeficiencyError,
    as_matrix,
    complete_orthonormal,
    qr_thin,
)
from .sketch import SketchConfig, range_finder

__all__ = ["GsvdFactors", "gsvd", "randomized_gsvd", "BETA_ZERO_TOL"]

# below this, a beta is flagged: the pair direction lies (numerically) outside
# the column space of B and diagonal solves against Sigma must be refused
BETA_ZERO_TOL = 1e-13


@dataclass(frozen=True)
class GsvdFactors:
    """GSVD factors of a pair.

    ``u`` has r <= n columns (r < n only on the sketched path, where the
    trailing gammas are exactly zero and carry no A-side directions).
    ``small_beta`` flags entries with beta below ``BETA_ZERO_TOL``.
    """

    u: np.ndarray
    v: np.ndarray
    y: np.ndarray
    gamma: np.ndarray
    beta: np.ndarray
    small_beta: np.ndarray

    @property
    def n_pairs(self):
        return len(self.gamma)

    def reconstruct_a(self):
        r = self.u.shape[1]
        return self.u @ (self.gamma[:r, None] * self.y[:, :r].T)

    def reconstruct_b(self):
        return self.v @ (self.beta[:, None] * self.y.T)


def _cs_gsvd(a, b, require_full_rank=True):
    """Shared kernel: factor (a, b) with any row counts and equal columns.

    Returns factors where the a-side values (gamma) are non-increasing.  The
    a-side orthonormal factor has min(rows(a), n) columns; both inputs are
    reproduced exactly up to roundoff.
    """
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    n = a.shape[1]
    if b.shape[1] != n:
        raise DimensionError(
            f"pair must share a column count, got {a.shape} and {b.shape}"
        )
    if a.shape[0] + b.shape[0] < n:
        raise DimensionError("stacked pair has fewer rows than columns")
    stacked = np.vstack([b, a])
    q, r = qr_thin(stacked)
    if require_full_rank:
        diag = np.abs(np.diag(r))
        scale = max(diag.max(), 1.0)
        if diag.min() <= n * np.finfo(float).eps * scale:
            raise RankDeficiencyError("stacked pair [B; A] is rank deficient")
    qb, qa = q[: b.shape[0]], q[b.shape[0] :]
    ra = qa.shape[0]
    # the full left factor is never needed; the right factor must stay n-by-n
    w, s, zt = np.linalg.svd(qa, full_matrices=ra < n)
    z = zt.T
    gamma = np.zeros(n)
    gamma[: min(ra, n)] = np.clip(s, 0.0, 1.0)

    vb = qb @ z
    beta = np.linalg.norm(vb, axis=0)
    small = beta < BETA_ZERO_TOL
    v = np.empty_like(vb)
    good = ~small
    v[:, good] = vb[:, good] / beta[good]
    if small.any():
        # directions absent from B: complete V orthonormally so the factor
        # stays well formed; beta stays (numerically) zero there.  When B has
        # fewer rows than columns the complement runs out; the leftover
        # columns are zeroed (they never enter a reconstruction).
        basis = complete_orthonormal(v[:, good])
        avail = basis.shape[1] - int(good.sum())
        v[:, small] = 0.0
        fill = np.flatnonzero(small)[:avail]
        v[:, fill] = basis[:, good.sum() : good.sum() + len(fill)]
    y = r.T @ z
    if small.any():
        # beta = 0 pairs all share the saturated a-side value 1, so the SVD
        # leaves their basis arbitrary within the block.  Canonicalize by
        # rotating the block to the SVD basis of its Y columns, which orders
        # the degenerate pairs by their actual a-side magnitude (the limit
        # of the generalized-value ordering).
        blk = np.flatnonzero(small)
        if blk.max() < w.shape[1]:
            pb, sb, qbt = np.linalg.svd(y[:, blk], full_matrices=False)
            y[:, blk] = pb * sb
            w[:, blk] = w[:, blk] @ qbt.T
    return GsvdFactors(u=w, v=v, y=y, gamma=gamma, beta=beta, small_beta=small)


def gsvd(a, b):
    """Deterministic GSVD of (A, B) with A m-by-n, B d-by-n, m >= n, d >= n."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    n = a.shape[1]
    if a.shape[0] < n or b.shape[0] < n:
        raise DimensionError(
            f"gsvd needs both matrices to have at least {n} rows, "
            f"got {a.shape} and {b.shape}"
        )
    return _cs_gsvd(a, b)


def randomized_gsvd(a, b, cfg: SketchConfig, sketch_width=None):
    """Randomized GSVD: exact GSVD of (Q Q^T A, B) on a sketched range of A.

    Returns (factors, q) where q is the m-by-(k+p) range basis.  The U factor
    has k+p columns; B is factored exactly, A only through its projection
    onto range(q).
    """
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    width = sketch_width if sketch_width is not None else (
        cfg.target_rank + cfg.oversampling
    )
    if width > a.shape[1]:
        raise DimensionError(
            f"sketch width {width} exceeds column count {a.shape[1]}"
        )
    q = range_finder(a, width, cfg.seed)
    factors = _cs_gsvd(q.T @ a, b)
    u = q @ factors.u
    return (
        GsvdFactors(
            u=u,
            v=factors.v,
            y=factors.y,
            gamma=factors.gamma,
            beta=factors.beta,
            small_beta=factors.small_beta,
        ),
        q,
    )
