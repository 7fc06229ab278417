import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcur.linalg import DimensionError, RankDeficiencyError
from rcur.rsvd import randomized_rsvd, rsvd_deterministic
from rcur.sketch import SketchConfig


def random_triplet(seed, m=20, n=12, d=30, ell=40):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((m, n))
    b = rng.standard_normal((m, ell))
    g = rng.standard_normal((d, n))
    return a, b, g


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_deterministic_factors_all_three_exactly(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 12))
    m = int(rng.integers(n, 20))
    d = int(rng.integers(m, 28))
    ell = int(rng.integers(d, 36))
    a, b, g = random_triplet(seed, m, n, d, ell)
    f = rsvd_deterministic(a, b, g)
    assert np.linalg.norm(f.reconstruct_a() - a) <= 1e-8 * max(np.linalg.norm(a), 1)
    assert np.linalg.norm(f.reconstruct_b() - b) <= 1e-8 * np.linalg.norm(b)
    assert np.linalg.norm(f.reconstruct_g() - g) <= 1e-8 * np.linalg.norm(g)


def test_factor_shapes_and_orthogonality():
    a, b, g = random_triplet(0)
    f = rsvd_deterministic(a, b, g)
    m, n = a.shape
    ell, d = b.shape[1], g.shape[0]
    assert f.z.shape == (m, m)
    assert f.w.shape == (n, n)
    assert f.u.shape == (ell, ell)
    assert f.v.shape == (d, d)
    assert np.allclose(f.u.T @ f.u, np.eye(ell), atol=1e-10)
    assert np.allclose(f.v.T @ f.v, np.eye(d), atol=1e-10)
    assert np.linalg.matrix_rank(f.z) == m
    assert np.linalg.matrix_rank(f.w) == n


def test_normalization_identity():
    a, b, g = random_triplet(1)
    f = rsvd_deterministic(a, b, g)
    assert np.allclose(f.alpha**2 + f.beta**2 + f.gamma**2, 1.0, atol=1e-10)


def test_b_diag_trailing_entries_are_one():
    a, b, g = random_triplet(2)
    f = rsvd_deterministic(a, b, g)
    n = a.shape[1]
    assert np.allclose(f.b_diag[n:], 1.0, atol=1e-10)
    assert np.allclose(f.b_diag[:n], f.beta)


def test_identity_couplings_recover_singular_values():
    # with B and G identity paddings the restricted values alpha/(beta*gamma)
    # reduce to the ordinary singular values of A
    rng = np.random.default_rng(3)
    m, n, d, ell = 12, 8, 20, 30
    a = rng.standard_normal((m, n))
    b = np.hstack([np.eye(m), np.zeros((m, ell - m))])
    g = np.vstack([np.eye(n), np.zeros((d - n, n))])
    f = rsvd_deterministic(a, b, g)
    ratio = np.sort(f.alpha / (f.beta[:n] * f.gamma))[::-1]
    assert np.allclose(ratio, np.linalg.svd(a, compute_uv=False), atol=1e-8)


def test_zero_a_keeps_b_and_g_exact():
    _, b, g = random_triplet(4)
    a = np.zeros((20, 12))
    f = rsvd_deterministic(a, b, g)
    assert np.linalg.norm(f.reconstruct_a()) <= 1e-10
    assert np.linalg.norm(f.reconstruct_b() - b) <= 1e-8 * np.linalg.norm(b)
    assert np.linalg.norm(f.reconstruct_g() - g) <= 1e-8 * np.linalg.norm(g)
    assert np.allclose(f.alpha, 0.0, atol=1e-12)


def test_randomized_a_exact_b_g_approximate():
    a, b, g = random_triplet(5, m=30, n=20, d=40, ell=50)
    f = randomized_rsvd(a, b, g, SketchConfig(5, 5, seed=7))
    assert np.linalg.norm(f.reconstruct_a() - a) <= 1e-8 * np.linalg.norm(a)
    # G is factored through a full-width sketch: exact up to roundoff
    assert np.linalg.norm(f.reconstruct_g() - g) <= 1e-8 * np.linalg.norm(g)
    # B goes through a narrow sketch: approximate but bounded
    err_b = np.linalg.norm(f.reconstruct_b() - b, 2)
    assert err_b <= np.linalg.norm(b, 2)


def test_randomized_reproducible():
    a, b, g = random_triplet(6, m=24, n=16, d=30, ell=36)
    cfg = SketchConfig(4, 5, seed=11)
    f1 = randomized_rsvd(a, b, g, cfg)
    f2 = randomized_rsvd(a, b, g, cfg)
    assert np.array_equal(f1.z, f2.z)
    assert np.array_equal(f1.u, f2.u)


def test_wide_second_sketch_matches_deterministic_b():
    # sketch width covering all of B's row space factors B exactly too
    a, b, g = random_triplet(7, m=15, n=10, d=20, ell=25)
    f = randomized_rsvd(a, b, g, SketchConfig(5, 5, seed=0), sketch_width=25)
    assert np.linalg.norm(f.reconstruct_b() - b) <= 1e-8 * np.linalg.norm(b)


def test_rejects_bad_dimension_ordering():
    rng = np.random.default_rng(8)
    a = rng.standard_normal((10, 12))  # m < n
    b = rng.standard_normal((10, 40))
    g = rng.standard_normal((20, 12))
    with pytest.raises(DimensionError):
        rsvd_deterministic(a, b, g)


def test_rejects_incompatible_shapes():
    rng = np.random.default_rng(9)
    a = rng.standard_normal((12, 8))
    b = rng.standard_normal((11, 30))  # row mismatch with A
    g = rng.standard_normal((20, 8))
    with pytest.raises(DimensionError):
        rsvd_deterministic(a, b, g)


def test_rank_deficient_g_raises():
    rng = np.random.default_rng(10)
    a = rng.standard_normal((12, 8))
    b = rng.standard_normal((12, 30))
    g = np.zeros((20, 8))
    g[:, 0] = 1.0
    with pytest.raises((RankDeficiencyError, np.linalg.LinAlgError)):
        rsvd_deterministic(a, b, g)
