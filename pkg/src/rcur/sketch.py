"""Gaussian sketching and the randomized range finder."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, qr_thin

__all__ = ["SketchConfig", "gaussian_matrix", "range_finder", "split_seed"]


@dataclass(frozen=True)
class SketchConfig:
    """Parameters of a randomized run.

    target_rank:  rank k of the final decomposition.
    oversampling: extra sketch columns p beyond the target rank.
    ldeim_budget: number khat <= k of basis vectors handed to L-DEIM.
    seed:         64-bit seed; fixing it makes every run reproducible.
    """

    target_rank: int
    oversampling: int = 5
    ldeim_budget: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.target_rank < 1:
            raise ValueError("target_rank must be >= 1")
        if self.oversampling < 0:
            raise ValueError("oversampling must be >= 0")
        khat = self.ldeim_budget
        if khat is None:
            # default from the L-DEIM guidance: half the target rank
            khat = max(1, -(-self.target_rank // 2))
            object.__setattr__(self, "ldeim_budget", khat)
        if not 1 <= khat <= self.target_rank:
            raise ValueError("ldeim_budget must satisfy 1 <= khat <= k")


def split_seed(seed, n):
    """Derive ``n`` independent child seeds from ``seed`` (SeedSequence spawn)."""
    children = np.random.SeedSequence(seed).spawn(n)
    return [int(c.generate_state(1)[0]) for c in children]


def gaussian_matrix(rows, cols, seed):
    """i.i.d. standard normal rows-by-cols matrix from a counter-based RNG."""
    if rows < 1 or cols < 1:
        raise ValueError("gaussian_matrix needs rows, cols >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    return rng.standard_normal((rows, cols))


def range_finder(a, width, seed):
    """Orthonormal basis Q of the sketched range of ``a`` (one-pass, no power iterations).

    Q = qr(A @ Omega).Q with Omega an n-by-width Gaussian sketch.
    """
    a = as_matrix(a)
    m, n = a.shape
    if width > min(m, n):
        raise ValueError(f"sketch width {width} exceeds min{a.shape}")
    omega = gaussian_matrix(n, width, seed)
    q, _ = qr_thin(a @ omega)
    return q
