"""Restricted SVD of a matrix triplet (A, B, G) via two GSVDs.

For A m-by-n, B m-by-l, G d-by-n with l >= d >= m >= n and B, G of full
rank, the triplet is factored as

    A = Z D_A W^T,    B = Z D_B U^T,    G = V D_G W^T,

with Z (m-by-m) and W (n-by-n) nonsingular and U, V orthogonal.  The route:
a GSVD of (A, G), then a GSVD of (B^T U1, Sigma1^{-1} Gamma1^T), with the
diagonal scaling gamma_i = sigma_i / sqrt(sigma_i^2 + 1) which yields
alpha_i^2 + beta_i^2 + gamma_i^2 = 1.

The A-factorization is exact on both the deterministic and the randomized
path; on the randomized path B and G are only approximately factored, with
sketch-tail error bounds.
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
from .gsvd import _cs_gsvd
from .sketch import SketchConfig, gaussian_matrix, split_seed

__all__ = ["RsvdFactors", "rsvd_deterministic", "randomized_rsvd"]

_SIGMA_TOL = 1e-13


@dataclass(frozen=True)
class RsvdFactors:
    """Factors of a restricted SVD.

    ``alpha``, ``beta``, ``gamma`` are the first n diagonal entries of
    D_A, D_B, D_G; ``b_diag`` is the full m-entry diagonal of D_B (entries
    past n are 1).  ``u`` has at least m columns and ``v`` at least n;
    the deterministic path completes them to full orthogonal matrices.
    """

    z: np.ndarray
    w: np.ndarray
    u: np.ndarray
    v: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    b_diag: np.ndarray

    def reconstruct_a(self):
        n = len(self.alpha)
        return self.z[:, :n] @ (self.alpha[:, None] * self.w.T)

    def reconstruct_b(self):
        m = self.z.shape[0]
        return self.z @ (self.b_diag[:, None] * self.u[:, :m].T)

    def reconstruct_g(self):
        n = len(self.gamma)
        return self.v[:, :n] @ (self.gamma[:, None] * self.w.T)


def _check_triplet(a, b, g):
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    g = as_matrix(g, "G")
    m, n = a.shape
    ell = b.shape[1]
    d = g.shape[0]
    if b.shape[0] != m or g.shape[1] != n:
        raise DimensionError(
            f"triplet shapes incompatible: A {a.shape}, B {b.shape}, G {g.shape}"
        )
    if not (ell >= d >= m >= n):
        raise DimensionError(
            f"triplet must satisfy l >= d >= m >= n, got ({ell},{d},{m},{n})"
        )
    return a, b, g


def _assemble(f1, u1_full, f2, u2):
    """Second-stage assembly shared by both paths.

    f1: GSVD of (G-side, A-side) with sigma1 = f1.gamma, gamma1-diag = f1.beta.
    f2: GSVD of (Sigma1^{-1} Gamma1^T side, B^T U1 side); u2 is the lifted
    B-side orthonormal factor.
    """
    n = len(f1.gamma)
    sigma = f2.gamma[:n]
    # free diagonal scaling; the canonical choice keeps the triplet normalized.
    # sigma == 0 (A deficient in that direction) would make it singular, so
    # fall back to 1 there: A and G stay exactly factored, only the
    # normalization identity is given up for those entries.
    gamma_g = np.where(sigma > _SIGMA_TOL, sigma / np.sqrt(sigma**2 + 1.0), 1.0)
    alpha = sigma * gamma_g
    z = u1_full @ f2.y
    v2 = f2.u
    w = (f1.y * f1.gamma) @ v2 / gamma_g
    v = f1.u @ v2
    beta = f2.beta[:n]
    return RsvdFactors(
        z=z, w=w, u=u2, v=v,
        alpha=alpha, beta=beta, gamma=gamma_g, b_diag=f2.beta.copy(),
    )


def _sigma_inv_gamma_t(f1, m):
    """Sigma1^{-1} Gamma1^T as a dense n-by-m matrix (zero past column n)."""
    if np.any(f1.gamma <= _SIGMA_TOL):
        raise RankDeficiencyError(
            "Sigma_1 is singular: G must have full column rank"
        )
    n = len(f1.gamma)
    x = np.zeros((n, m))
    x[np.arange(n), np.arange(n)] = f1.beta / f1.gamma
    return x


def rsvd_deterministic(a, b, g, full_factors=True):
    """Deterministic RSVD of a triplet.

    ``full_factors`` completes U to l-by-l and V to d-by-d orthogonal
    matrices, matching the textbook form of the factorization; the thin
    variant carries the same information in the leading columns.
    """
    a, b, g = _check_triplet(a, b, g)
    m = a.shape[0]
    f1 = _cs_gsvd(g, a)
    u1_full = complete_orthonormal(f1.v)
    x = _sigma_inv_gamma_t(f1, m)
    bt_u1 = b.T @ u1_full
    f2 = _cs_gsvd(x, bt_u1, require_full_rank=False)
    factors = _assemble(f1, u1_full, f2, f2.v)
    if full_factors:
        factors = RsvdFactors(
            z=factors.z, w=factors.w,
            u=complete_orthonormal(factors.u),
            v=complete_orthonormal(factors.v),
            alpha=factors.alpha, beta=factors.beta, gamma=factors.gamma,
            b_diag=factors.b_diag,
        )
    return factors


def randomized_rsvd(a, b, g, cfg: SketchConfig, sketch_width=None):
    """Randomized RSVD: both inner GSVDs act on sketched projections.

    The first sketch is full width n (so Sigma_1 stays square); the second
    sketches B^T U_1 down to ``sketch_width`` columns (default k + p,
    clamped to at least m - n so the reduced pair stays well posed, and to
    at most l).
    """
    a, b, g = _check_triplet(a, b, g)
    m, n = a.shape
    ell = b.shape[1]
    seed1, seed2 = split_seed(cfg.seed, 2)

    omega1 = gaussian_matrix(n, n, seed1)
    h1, _ = qr_thin(g @ omega1)
    f1 = _cs_gsvd(h1.T @ g, a)
    f1 = type(f1)(u=h1 @ f1.u, v=f1.v, y=f1.y, gamma=f1.gamma,
                  beta=f1.beta, small_beta=f1.small_beta)
    u1_full = complete_orthonormal(f1.v)

    width = sketch_width if sketch_width is not None else (
        cfg.target_rank + cfg.oversampling
    )
    width = min(max(width, m - n + 1, 1), ell)
    x = _sigma_inv_gamma_t(f1, m)
    bt_u1 = b.T @ u1_full
    omega2 = gaussian_matrix(m, width, seed2)
    h2, _ = qr_thin(bt_u1 @ omega2)
    f2 = _cs_gsvd(x, h2.T @ bt_u1, require_full_rank=False)
    return _assemble(f1, u1_full, f2, h2 @ f2.v)
