"""Uniform time grids for path sampling."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t0, t0+dt, ..., t0+(steps-1)*dt.

    A grid with steps=1 is allowed and means a single stationary snapshot;
    dt must still be positive (it is simply unused).
    """

    t0: float = 0.0
    dt: float = 1e-3
    steps: int = 1

    def __post_init__(self):
        if not np.isfinite(self.t0):
            raise ValueError("t0 must be finite")
        if not (self.dt > 0 and np.isfinite(self.dt)):
            raise ValueError(f"dt must be positive and finite, got {self.dt}")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.steps)

    @property
    def span(self) -> float:
        return self.dt * (self.steps - 1)

    @classmethod
    def from_interval(cls, t_max: float, dt: float, t0: float = 0.0) -> "TimeGrid":
        """Grid covering [t0, t0+t_max] with spacing dt (t_max rounded to a multiple of dt)."""
        if t_max < 0:
            raise ValueError(f"t_max must be >= 0, got {t_max}")
        steps = int(round(t_max / dt)) + 1
        return cls(t0=t0, dt=dt, steps=steps)
