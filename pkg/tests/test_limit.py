"""The limiting entry family: rates, independence, and the bhat map."""

import math

import numpy as np
import pytest

from dbmtri.grids import TimeGrid
from dbmtri.limit import (
    bhat_transform,
    entry_vector_from_tridiagonal,
    limit_entries_sample,
    norm_model_offdiag,
)
from dbmtri.ou import ou_sample_vector
from dbmtri.tridiag import SymTridiagonalPath

GATE = 5.0


def test_sample_shapes_and_determinism():
    grid = TimeGrid(dt=0.02, steps=11)
    s1 = limit_entries_sample(4, grid, seed=3)
    s2 = limit_entries_sample(4, grid, seed=3)
    assert s1.a.shape == (11, 4) and s1.b.shape == (11, 4)
    assert np.array_equal(s1.a, s2.a) and np.array_equal(s1.b, s2.b)


def test_rates_and_marginals():
    # pool over many independent samples at a single lag; A_j decays at
    # 2j-1 and B_j at 2j, both with stationary variance 2
    k, lag, reps = 3, 0.1, 8000
    grid = TimeGrid(dt=lag, steps=2)
    a0 = np.empty((reps, k))
    a1 = np.empty((reps, k))
    b0 = np.empty((reps, k))
    b1 = np.empty((reps, k))
    for s in range(reps):
        lim = limit_entries_sample(k, grid, seed=s)
        a0[s], a1[s] = lim.a[0], lim.a[1]
        b0[s], b1[s] = lim.b[0], lim.b[1]
    j = np.arange(1, k + 1)
    for x in (a0, b0):
        assert np.all(np.abs(x.var(axis=0) - 2.0) < GATE * 2.0 * np.sqrt(2.0 / reps))
    cov_a = np.mean(a0 * a1, axis=0)
    cov_b = np.mean(b0 * b1, axis=0)
    se = GATE * 2.0 * np.sqrt(2.0 / reps)
    assert np.all(np.abs(cov_a - 2.0 * np.exp(-(2 * j - 1) * lag)) < se)
    assert np.all(np.abs(cov_b - 2.0 * np.exp(-2 * j * lag)) < se)
    # independence across the family: distinct processes at equal times
    assert abs(np.mean(a0[:, 0] * a0[:, 1])) < se
    assert abs(np.mean(a0[:, 0] * b0[:, 0])) < se


def test_bhat_transform_algebra():
    n = 50
    b = np.array([0.0, 1.0, -2.0])
    vals, ok = bhat_transform(b, n)
    assert ok is True
    assert np.allclose(vals, np.sqrt(n + math.sqrt(n) * b))


def test_bhat_flags_negative_radicand():
    n = 4
    rows = np.array([[0.0, 0.5], [-3.0, 0.0]])  # 4 + 2*(-3) < 0
    vals, ok = bhat_transform(rows, n)
    assert ok.tolist() == [True, False]
    assert np.isnan(vals[1, 0]) and not np.any(np.isnan(vals[0]))


def test_bhat_scalar_flag_for_vector_input():
    vals, ok = bhat_transform(np.array([-30.0]), 9)
    assert ok is False and np.isnan(vals[0])


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_bhat_beta_scales_nu(beta):
    vals, _ = bhat_transform(np.zeros(3), 16, beta=beta)
    assert np.allclose(vals, math.sqrt(16.0 * beta))


def test_entry_vector_scaling():
    grid = TimeGrid(dt=0.1, steps=2)
    diag = np.arange(20.0).reshape(2, 10)
    offdiag = np.full((2, 9), 3.0)
    path = SymTridiagonalPath(grid=grid, diag=diag, offdiag=offdiag)
    n, beta = 36, 2
    ev = entry_vector_from_tridiagonal(path, k=4, beta=beta, n=n)
    assert ev.a.shape == (2, 4)
    assert np.array_equal(ev.a, diag[:, :4])
    want = (9.0 - beta * n) / (beta * 6.0)
    assert np.allclose(ev.b_centered, want)


def test_entry_vector_needs_headroom():
    grid = TimeGrid(dt=0.1, steps=1)
    path = SymTridiagonalPath(grid=grid, diag=np.zeros((1, 5)), offdiag=np.zeros((1, 4)))
    with pytest.raises(ValueError):
        entry_vector_from_tridiagonal(path, k=2, beta=1, n=100)


def test_norm_model_matches_direct_norm():
    n, j = 40, 3
    grid = TimeGrid(dt=0.05, steps=6)
    nm = norm_model_offdiag(n, j, grid, seed=11, beta=1)
    v = ou_sample_vector(float(j), n - j, grid, seed=11)
    sq = np.sum(v.values**2, axis=1)
    assert np.allclose(nm.norm, np.sqrt(sq))
    assert np.allclose(nm.centered, (sq - (n - j)) / math.sqrt(2.0 * (n - j)))


def test_norm_model_centered_moments():
    # ||v||^2 is a sum of n-j iid squares: mean dim, variance 2 dim
    n, j, reps = 200, 2, 3000
    grid = TimeGrid(dt=0.01, steps=1)
    c = np.array([norm_model_offdiag(n, j, grid, seed=s).centered[0] for s in range(reps)])
    assert abs(c.mean()) < GATE / math.sqrt(reps)
    assert abs(c.var() - 1.0) < GATE * np.sqrt(3.0 / reps)  # kurtosis inflation margin
