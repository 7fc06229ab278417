"""Generalized CUR of a matrix pair: deterministic and randomized constructors.

A rank-k GCUR approximates both matrices of a pair through a shared column
index vector p and per-matrix row index vectors:

    A ~= A(:, p) M_A A(s_A, :),    B ~= B(:, p) M_B B(s_B, :).

Indices come from DEIM or L-DEIM applied to the (possibly sketched) GSVD
factors; middle matrices are two least-squares solves, never an explicit
pseudoinverse.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    RankDeficiencyError,
    as_matrix,
    lstsq_solve,
    select_columns,
    select_rows,
    svd_thin,
    two_norm,
)
from .gsvd import GsvdFactors, gsvd, randomized_gsvd
from .selection import Method, deim_select, ldeim_select
from .sketch import SketchConfig

__all__ = [
    "GcurFactors",
    "GcurBound",
    "middle_matrix",
    "gcur_from_factors",
    "gcur_deterministic",
    "r_deim_gcur",
    "r_ldeim_gcur",
    "gcur_error",
    "gcur_bound",
]


@dataclass(frozen=True)
class GcurFactors:
    """Selected indices and middle matrices of a rank-k GCUR."""

    p: np.ndarray
    s_a: np.ndarray
    m_a: np.ndarray
    k: int
    s_b: np.ndarray | None = None
    m_b: np.ndarray | None = None

    def reconstruct_a(self, a):
        return select_columns(a, self.p) @ self.m_a @ select_rows(a, self.s_a)

    def reconstruct_b(self, b):
        if self.s_b is None:
            raise ValueError("B-side factors were skipped for this run")
        return select_columns(b, self.p) @ self.m_b @ select_rows(b, self.s_b)


@dataclass(frozen=True)
class GcurBound:
    """Evaluated right-hand sides of the probabilistic GCUR error bounds."""

    theta_k: float
    eta_k: float
    bound_a: float
    bound_b: float
    k: int
    p: int


def middle_matrix(m, p, s):
    """Middle factor C^+ M R^+ for C = M(:, p), R = M(s, :), via least squares."""
    m = as_matrix(m)
    c = select_columns(m, p)
    r = select_rows(m, s)
    t, _, rank_c, _ = np.linalg.lstsq(c, m, rcond=None)
    if rank_c < c.shape[1]:
        raise RankDeficiencyError(
            f"selected columns are rank deficient ({rank_c} < {c.shape[1]})"
        )
    mid_t, _, rank_r, _ = np.linalg.lstsq(r.T, t.T, rcond=None)
    if rank_r < r.shape[0]:
        raise RankDeficiencyError(
            f"selected rows are rank deficient ({rank_r} < {r.shape[0]})"
        )
    return mid_t.T


def _select(basis, k, method, khat):
    if method is Method.DEIM:
        return deim_select(basis[:, :k]).indices
    return ldeim_select(basis[:, :khat], k).indices


def gcur_from_factors(a, b, factors: GsvdFactors, k, method=Method.DEIM,
                      khat=None, a_only=False):
    """Build GCUR indices and middle matrices from precomputed GSVD factors."""
    if khat is None:
        khat = max(1, -(-k // 2))
    p = _select(factors.y, k, method, khat)
    s_a = _select(factors.u, k, method, khat)
    m_a = middle_matrix(a, p, s_a)
    if a_only:
        return GcurFactors(p=p, s_a=s_a, m_a=m_a, k=k)
    s_b = _select(factors.v, k, method, khat)
    m_b = middle_matrix(b, p, s_b)
    return GcurFactors(p=p, s_a=s_a, m_a=m_a, k=k, s_b=s_b, m_b=m_b)


def gcur_deterministic(a, b, k, method=Method.DEIM, khat=None, a_only=False):
    """Rank-k GCUR from the full GSVD of (A, B)."""
    return gcur_from_factors(a, b, gsvd(a, b), k, method, khat, a_only)


def r_deim_gcur(a, b, cfg: SketchConfig, a_only=False):
    """Randomized DEIM-GCUR: DEIM on a (k+p)-wide sketched GSVD."""
    factors, _ = randomized_gsvd(a, b, cfg)
    return gcur_from_factors(a, b, factors, cfg.target_rank, Method.DEIM,
                             a_only=a_only)


def r_ldeim_gcur(a, b, cfg: SketchConfig, a_only=False):
    """Randomized L-DEIM GCUR: khat-wide sketch, L-DEIM extends to k indices."""
    khat = cfg.ldeim_budget
    factors, _ = randomized_gsvd(
        a, b, cfg, sketch_width=khat + cfg.oversampling
    )
    return gcur_from_factors(a, b, factors, cfg.target_rank, Method.LDEIM,
                             khat=khat, a_only=a_only)


def gcur_error(a, factors: GcurFactors):
    """Relative spectral-norm error of the A-side reconstruction."""
    a = as_matrix(a)
    return two_norm(a - factors.reconstruct_a(a)) / two_norm(a)


def sketch_tail_bound(singular_values, k, p):
    """Range-finder tail bound (1 + 6 sqrt((k+p) p log p)) s_{k+1} + 3 sqrt(k+p) ||tail||."""
    s = np.asarray(singular_values, dtype=float)
    tail = s[k:] if k < len(s) else np.array([0.0])
    logp = np.log(p) if p >= 1 else 0.0
    lead = (1.0 + 6.0 * np.sqrt((k + p) * p * logp)) * (tail[0] if tail.size else 0.0)
    return lead + 3.0 * np.sqrt(k + p) * np.sqrt(np.sum(tail**2))


def gcur_bound(a, b, k, p):
    """Evaluate the probabilistic error bounds for a randomized rank-k GCUR.

    bound_a is the full right-hand side including the stacked-pseudoinverse
    and generalized-singular-value terms; bound_b is the sketch-free B-side
    bound.  Offline diagnostic: costs a full SVD of A and a GSVD of (A, B).
    """
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    m, n = a.shape
    d = b.shape[0]
    if k >= n:
        raise ValueError("bound needs k < n so the (k+1)th pair value exists")
    _, sa, _ = svd_thin(a)
    theta = sketch_tail_bound(sa, k, p)
    eta = np.sqrt(n * k / 3.0) * 2.0**k + np.sqrt(m * k / 3.0) * 2.0**k
    factors = gsvd(a, b)
    gam, bet = factors.gamma[k], factors.beta[k]
    _, s_stack, _ = svd_thin(np.vstack([a, b]))
    pinv_norm = 1.0 / s_stack[-1]
    norm_sum = two_norm(a) + two_norm(b)
    bound_a = eta * (theta + norm_sum * (gam / bet + theta / bet * pinv_norm))
    eta_b = np.sqrt(n * k / 3.0) * 2.0**k + np.sqrt(d * k / 3.0) * 2.0**k
    bound_b = eta_b * norm_sum
    return GcurBound(theta_k=float(theta), eta_k=float(eta),
                     bound_a=float(bound_a), bound_b=float(bound_b), k=k, p=p)
