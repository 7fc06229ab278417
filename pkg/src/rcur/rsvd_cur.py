"""Coordinated CUR of a matrix triplet, driven by restricted-SVD factors.

Shared indexing: columns p are common to A and G, rows s are common to A
and B, so the three approximations stay coordinated:

    A ~= A(:, p)   M_A A(s, :),
    B ~= B(:, p_B) M_B B(s, :),
    G ~= G(:, p)   M_G G(s_G, :).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, qr_thin, select_columns, select_rows, svd_thin, two_norm
from .gcur import middle_matrix, sketch_tail_bound
from .rsvd import RsvdFactors, randomized_rsvd, rsvd_deterministic
from .selection import Method, deim_select, ldeim_select
from .sketch import SketchConfig

__all__ = [
    "RsvdCurFactors",
    "RsvdCurBound",
    "rsvd_cur",
    "rsvd_cur_from_factors",
    "r_ldeim_rsvd_cur",
    "rsvdcur_bound",
]


@dataclass(frozen=True)
class RsvdCurFactors:
    p: np.ndarray
    p_b: np.ndarray
    s: np.ndarray
    s_g: np.ndarray
    m_a: np.ndarray
    m_b: np.ndarray
    m_g: np.ndarray
    k: int

    def reconstruct_a(self, a):
        return select_columns(a, self.p) @ self.m_a @ select_rows(a, self.s)

    def reconstruct_b(self, b):
        return select_columns(b, self.p_b) @ self.m_b @ select_rows(b, self.s)

    def reconstruct_g(self, g):
        return select_columns(g, self.p) @ self.m_g @ select_rows(g, self.s_g)


@dataclass(frozen=True)
class RsvdCurBound:
    """Right-hand sides of the three probabilistic RSVD-CUR error bounds."""

    bound_a: float
    bound_b: float
    bound_g: float
    eta_b: float
    eta_g: float
    t_hat_w: float
    t_hat_z: float


def _select(basis, k, method, khat):
    if method is Method.DEIM:
        return deim_select(basis[:, :k]).indices
    return ldeim_select(basis[:, :khat], k).indices


def _carrying_columns(u):
    """Drop structurally zero columns (pairs the sketched factor cannot carry).

    On the randomized path the B-side factor spans only the sketch width;
    pairs outside it have a zero diagonal entry and an all-zero column.  The
    surviving columns are orthonormal and stay in dominance order.
    """
    norms = np.linalg.norm(u, axis=0)
    return u[:, norms > 0.5]


def rsvd_cur_from_factors(a, b, g, factors: RsvdFactors, k,
                          method=Method.DEIM, khat=None):
    """Select indices from RSVD factors (W -> p, Z -> s, U -> p_B, V -> s_G)."""
    if khat is None:
        khat = max(1, -(-k // 2))
    p = _select(factors.w, k, method, khat)
    s = _select(factors.z, k, method, khat)
    p_b = _select(_carrying_columns(factors.u), k, method, khat)
    s_g = _select(factors.v, k, method, khat)
    return RsvdCurFactors(
        p=p, p_b=p_b, s=s, s_g=s_g,
        m_a=middle_matrix(a, p, s),
        m_b=middle_matrix(b, p_b, s),
        m_g=middle_matrix(g, p, s_g),
        k=k,
    )


def rsvd_cur(a, b, g, k, method=Method.DEIM, khat=None):
    """Rank-k RSVD-CUR from the deterministic (full-factor) RSVD."""
    factors = rsvd_deterministic(a, b, g)
    return rsvd_cur_from_factors(a, b, g, factors, k, method, khat)


def r_ldeim_rsvd_cur(a, b, g, cfg: SketchConfig):
    """Randomized L-DEIM RSVD-CUR: khat-wide second sketch, k indices."""
    khat = cfg.ldeim_budget
    factors = randomized_rsvd(a, b, g, cfg,
                              sketch_width=khat + cfg.oversampling)
    return rsvd_cur_from_factors(a, b, g, factors, cfg.target_rank,
                                 Method.LDEIM, khat=khat)


def _tail_block_norm(mat, khat):
    """||T_hat|| from the QR factor of ``mat``: columns past khat of R."""
    _, r = qr_thin(mat)
    return two_norm(r[:, khat:]) if khat < r.shape[1] else 0.0


def rsvdcur_bound(a, b, g, factors: RsvdFactors, k, khat, p):
    """Evaluate the probabilistic error bounds of a randomized RSVD-CUR run.

    Uses the QR partitions of the RSVD factors W and Z and the spectral
    tails of B and G.  Diagnostic only; costs full SVDs of B and G.
    """
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    g = as_matrix(g, "G")
    m, n = a.shape
    ell, d = b.shape[1], g.shape[0]

    t_hat_w = _tail_block_norm(factors.w, khat)
    t_hat_z = _tail_block_norm(factors.z, khat)

    _, sg, _ = svd_thin(g)
    _, sb, _ = svd_thin(b)
    # G's sketch is full width n, i.e. oversampling n - khat
    e_g = sketch_tail_bound(sg, khat, max(n - khat, 1))
    e_b = sketch_tail_bound(sb, khat, p)

    eta_g = np.sqrt(n * khat / 3.0) * 2.0**khat + np.sqrt(d * khat / 3.0) * 2.0**khat
    eta_b = np.sqrt(ell * khat / 3.0) * 2.0**khat + np.sqrt(m * khat / 3.0) * 2.0**khat
    eta_a = np.sqrt(n * khat / 3.0) * 2.0**khat + np.sqrt(m * khat / 3.0) * 2.0**khat

    alpha_next = float(factors.alpha[k]) if k < len(factors.alpha) else 0.0
    return RsvdCurBound(
        bound_a=float(alpha_next * eta_a * t_hat_w * t_hat_z),
        bound_b=float(eta_b * (e_b + t_hat_z)),
        bound_g=float(eta_g * (e_g + t_hat_w)),
        eta_b=float(eta_b),
        eta_g=float(eta_g),
        t_hat_w=float(t_hat_w),
        t_hat_z=float(t_hat_z),
    )
