"""The OU sampler against the exact stationary law.

Monte Carlo assertions here use a five-sigma studentized gate on exact
finite-sample identities (stationary variance 1, lag covariance e^{-r dt}),
so failures indicate a wrong transition kernel rather than bad luck.
"""

import numpy as np
import pytest

from dbmtri.grids import TimeGrid
from dbmtri.ou import OuParams, ou_sample_path, ou_sample_vector

GATE = 5.0


def test_reproducible_and_stream_separated():
    grid = TimeGrid(dt=0.05, steps=20)
    p = OuParams(rate=3.0)
    a = ou_sample_path(p, grid, seed=11).values
    b = ou_sample_path(p, grid, seed=11).values
    c = ou_sample_path(p, grid, seed=11, stream=1).values
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_stationary_moments_and_lag_covariance():
    rate, dt, paths = 2.0, 0.125, 40000
    vec = ou_sample_vector(rate, paths, TimeGrid(dt=dt, steps=2), seed=5)
    x0, x1 = vec.values[0], vec.values[1]
    for x in (x0, x1):
        assert abs(x.mean()) < GATE / np.sqrt(paths)
        # Var(sample var) ~ 2/paths for a unit Gaussian
        assert abs(x.var() - 1.0) < GATE * np.sqrt(2.0 / paths)
    rho = np.exp(-rate * dt)
    cov = np.mean(x0 * x1) - x0.mean() * x1.mean()
    se = np.sqrt((1.0 + rho**2) / paths)
    assert abs(cov - rho) < GATE * se


def test_two_step_composition_matches_one_coarse_step():
    # Markov consistency: fine grid marginal at t equals the coarse one.
    p = OuParams(rate=1.5)
    fine = ou_sample_path(p, TimeGrid(dt=0.1, steps=3), seed=3).values
    paths = 30000
    fine_v = ou_sample_vector(1.5, paths, TimeGrid(dt=0.1, steps=3), seed=3)
    coarse_v = ou_sample_vector(1.5, paths, TimeGrid(dt=0.2, steps=2), seed=4)
    rho = np.exp(-1.5 * 0.2)
    for vec in (fine_v.values[::2], coarse_v.values):
        cov = np.mean(vec[0] * vec[1])
        assert abs(cov - rho) < GATE * np.sqrt((1.0 + rho**2) / paths)
    assert fine.shape == (3,)


@pytest.mark.parametrize("rate", [1.0, 4.0, 16.0])
def test_lag_covariance_tracks_rate(rate):
    paths = 20000
    grid = TimeGrid(dt=0.25, steps=2)
    vals = ou_sample_vector(rate, paths, grid, seed=int(rate)).values
    cov = np.mean(vals[0] * vals[1])
    expect = np.exp(-rate * 0.25)
    assert abs(cov - expect) < GATE * np.sqrt(2.0 / paths)


def test_vector_shape_and_dim_rules():
    grid = TimeGrid(dt=0.1, steps=4)
    v = ou_sample_vector(2.0, 7, grid, seed=0)
    assert v.values.shape == (4, 7)
    w = ou_sample_vector(np.array([1.0, 2.0]), None, grid, seed=0)
    assert w.values.shape == (4, 2)
    with pytest.raises(ValueError):
        ou_sample_vector(np.array([1.0, 2.0]), 3, grid, seed=0)


def test_rate_must_be_positive():
    with pytest.raises(ValueError):
        OuParams(rate=0.0)
