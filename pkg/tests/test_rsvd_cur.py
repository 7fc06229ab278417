import numpy as np
import pytest

from rcur.linalg import RankDeficiencyError
from rcur.rsvd import rsvd_deterministic
from rcur.rsvd_cur import (
    r_ldeim_rsvd_cur,
    rsvd_cur,
    rsvd_cur_from_factors,
    rsvdcur_bound,
)
from rcur.selection import Method
from rcur.sketch import SketchConfig


def noisy_lowrank_triplet(seed, m=40, k_true=6, d=60, ell=80, eps=0.05):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((m, k_true)) @ rng.standard_normal((k_true, m))
    b = rng.standard_normal((m, ell))
    g = rng.standard_normal((d, m))
    noise = b[:, :d] @ rng.standard_normal((d, d)) @ g[:, :m]
    a_e = a + eps * np.linalg.norm(a, 2) / np.linalg.norm(noise, 2) * noise
    return a, a_e, b, g


def test_index_lengths_and_sharing():
    a, a_e, b, g = noisy_lowrank_triplet(0)
    k = 6
    fac = rsvd_cur(a_e, b, g, k)
    for idx in (fac.p, fac.p_b, fac.s, fac.s_g):
        assert len(idx) == k
        assert len(set(idx.tolist())) == k
    # shared indexing: A and G share columns p; A and B share rows s
    assert fac.reconstruct_a(a_e).shape == a_e.shape
    assert fac.reconstruct_b(b).shape == b.shape
    assert fac.reconstruct_g(g).shape == g.shape


def test_recovers_low_rank_signal():
    a, a_e, b, g = noisy_lowrank_triplet(1)
    fac = rsvd_cur(a_e, b, g, 6)
    err = np.linalg.norm(a - fac.reconstruct_a(a_e), 2) / np.linalg.norm(a, 2)
    assert err < 0.2


def test_exact_rank_inputs_reconstruct_exactly():
    rng = np.random.default_rng(2)
    k = 4
    m = 20
    a = rng.standard_normal((m, k)) @ rng.standard_normal((k, m))
    b = rng.standard_normal((m, 40))
    g = rng.standard_normal((30, m))
    fac = rsvd_cur(a, b, g, k)
    assert np.allclose(fac.reconstruct_a(a), a, atol=1e-7 * np.linalg.norm(a))


def test_ldeim_variant_and_reproducibility():
    a, a_e, b, g = noisy_lowrank_triplet(3)
    cfg = SketchConfig(6, 10, ldeim_budget=3, seed=5)
    f1 = r_ldeim_rsvd_cur(a_e, b, g, cfg)
    f2 = r_ldeim_rsvd_cur(a_e, b, g, cfg)
    assert np.array_equal(f1.p, f2.p)
    assert np.array_equal(f1.s, f2.s)
    assert len(f1.p) == 6


def test_from_factors_matches_full_run():
    a, a_e, b, g = noisy_lowrank_triplet(4)
    factors = rsvd_deterministic(a_e, b, g)
    f1 = rsvd_cur_from_factors(a_e, b, g, factors, 5, Method.DEIM)
    f2 = rsvd_cur(a_e, b, g, 5)
    assert np.array_equal(f1.p, f2.p)
    assert np.array_equal(f1.s, f2.s)
    assert np.allclose(f1.m_a, f2.m_a)


def test_duplicate_row_matrix_raises():
    # all rows equal: the selected rows cannot have full rank for k >= 2
    a = np.ones((10, 10))
    b = np.ones((10, 20)) + np.eye(10, 20)
    g = np.eye(12, 10)
    with pytest.raises((RankDeficiencyError, np.linalg.LinAlgError)):
        rsvd_cur(a, b, g, 2)


def test_bound_evaluator_dominates_errors():
    a, a_e, b, g = noisy_lowrank_triplet(5)
    k = khat = 5
    cfg = SketchConfig(k, 5, ldeim_budget=khat, seed=1)
    from rcur.rsvd import randomized_rsvd

    factors = randomized_rsvd(a_e, b, g, cfg, sketch_width=khat + 5)
    fac = r_ldeim_rsvd_cur(a_e, b, g, cfg)
    bound = rsvdcur_bound(a_e, b, g, factors, k, khat, 5)
    assert bound.bound_a >= 0
    err_b = np.linalg.norm(b - fac.reconstruct_b(b), 2)
    err_g = np.linalg.norm(g - fac.reconstruct_g(g), 2)
    assert err_b <= bound.bound_b
    assert err_g <= bound.bound_g
    assert bound.eta_b > 0 and bound.eta_g > 0
