import numpy as np
import pytest
from hypothesis import given, strategies as st

from dbmtri.grids import TimeGrid


def test_times_layout():
    g = TimeGrid(t0=0.5, dt=0.25, steps=4)
    assert np.allclose(g.times, [0.5, 0.75, 1.0, 1.25])
    assert g.span == pytest.approx(0.75)


def test_single_step_grid():
    g = TimeGrid(steps=1)
    assert g.times.shape == (1,)
    assert g.span == 0.0


def test_from_interval_covers_endpoint():
    g = TimeGrid.from_interval(0.5, 0.1)
    assert g.steps == 6
    assert g.times[0] == 0.0
    assert g.times[-1] == pytest.approx(0.5)


def test_from_interval_inexact_dt():
    # 0.5 / 0.15 is not integral; t_max rounds to the nearest multiple of dt
    g = TimeGrid.from_interval(0.5, 0.15)
    assert g.times[0] == 0.0
    assert abs(g.times[-1] - 0.5) <= 0.15 / 2 + 1e-12


@given(steps=st.integers(1, 300), dt=st.floats(1e-6, 10.0), t0=st.floats(-5.0, 5.0))
def test_times_match_arange(steps, dt, t0):
    g = TimeGrid(t0=t0, dt=dt, steps=steps)
    assert g.times.shape == (steps,)
    assert np.allclose(g.times, t0 + dt * np.arange(steps))


@pytest.mark.parametrize("bad", [0, -3])
def test_steps_must_be_positive(bad):
    with pytest.raises(ValueError):
        TimeGrid(steps=bad)
