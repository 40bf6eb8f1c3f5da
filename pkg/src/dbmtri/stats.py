"""Streaming across-sample estimators for path-valued Monte Carlo.

One accumulator tracks, per grid time, shifted power sums of a series
X(t) together with cross sums against the sample's own t=0 slice, enough to
recover mean, variance, central moments up to order four, the lag
covariance curve Cov(X(0), X(t)) with a plug-in standard error, and excess
kurtosis.  Sums are linear in the samples, so accumulators merge and
subtract exactly; subtraction powers the delete-one-chunk jackknife.

The caller picks the shift anchors (roughly the series mean) so fourth
powers stay well-scaled even for series centered far from zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gbe import iter_gbe_frames
from .grids import TimeGrid
from .rng import CHUNK_SAMPLES, chunk_ranges, derive_rng
from .tridiag import tridiagonalize


@dataclass(frozen=True)
class CurveEstimate:
    t: np.ndarray
    value: np.ndarray
    se: np.ndarray
    count: int


class MomentAccumulator:
    """Power sums 1..4 of X(t) - anchor plus cross sums against X(0) - anchor0."""

    __slots__ = ("steps", "anchor", "anchor0", "count", "s", "s0", "c")

    def __init__(self, steps: int, anchor: float = 0.0, anchor0: float | None = None):
        self.steps = steps
        self.anchor = float(anchor)
        self.anchor0 = self.anchor if anchor0 is None else float(anchor0)
        self.count = 0
        self.s = np.zeros((4, steps))  # s[p-1] = sum y^p
        self.s0 = np.zeros(4)  # sums of y0^p
        self.c = np.zeros((4, steps))  # cross sums y*y0, y^2*y0, y*y0^2, y^2*y0^2

    def add_batch(self, values: np.ndarray, v0: np.ndarray | None = None) -> "MomentAccumulator":
        """values: (m, steps) block of sample paths; v0 defaults to values[:, 0]."""
        values = np.atleast_2d(values)
        if values.shape[1] != self.steps:
            raise ValueError(f"expected {self.steps} grid points, got {values.shape[1]}")
        y = values - self.anchor
        y0 = (values[:, 0] if v0 is None else np.asarray(v0, dtype=float)) - self.anchor0
        y2 = y * y
        self.count += y.shape[0]
        self.s[0] += y.sum(axis=0)
        self.s[1] += y2.sum(axis=0)
        self.s[2] += (y2 * y).sum(axis=0)
        self.s[3] += (y2 * y2).sum(axis=0)
        y0p = y0.copy()
        for p in range(4):
            self.s0[p] += y0p.sum()
            y0p *= y0
        self.c[0] += y0 @ y
        self.c[1] += y0 @ y2
        y0sq = y0 * y0
        self.c[2] += y0sq @ y
        self.c[3] += y0sq @ y2
        return self

    def _compatible(self, other: "MomentAccumulator") -> None:
        if (self.steps, self.anchor, self.anchor0) != (other.steps, other.anchor, other.anchor0):
            raise ValueError("accumulators have different shape or anchors")

    def merge(self, other: "MomentAccumulator") -> "MomentAccumulator":
        self._compatible(other)
        self.count += other.count
        self.s += other.s
        self.s0 += other.s0
        self.c += other.c
        return self

    def subtract(self, other: "MomentAccumulator") -> "MomentAccumulator":
        """Remove a previously merged block (sums are linear); used by the jackknife."""
        self._compatible(other)
        self.count -= other.count
        self.s -= other.s
        self.s0 -= other.s0
        self.c -= other.c
        return self

    def copy(self) -> "MomentAccumulator":
        out = MomentAccumulator(self.steps, self.anchor, self.anchor0)
        out.count = self.count
        out.s = self.s.copy()
        out.s0 = self.s0.copy()
        out.c = self.c.copy()
        return out

    # ---- estimators -------------------------------------------------

    def mean(self) -> np.ndarray:
        return self.anchor + self.s[0] / self.count

    def central_moment(self, p: int) -> np.ndarray:
        """Biased (1/n) central moment of order p in {2, 3, 4}."""
        n = self.count
        m1 = self.s[0] / n
        if p == 2:
            return self.s[1] / n - m1 * m1
        if p == 3:
            return (self.s[2] - 3.0 * m1 * self.s[1]) / n + 2.0 * m1**3
        if p == 4:
            return (self.s[3] - 4.0 * m1 * self.s[2] + 6.0 * m1 * m1 * self.s[1]) / n - 3.0 * m1**4
        raise ValueError("central moments implemented for p = 2, 3, 4")

    def variance(self) -> np.ndarray:
        n = self.count
        return self.central_moment(2) * n / (n - 1)

    def variance_se_plugin(self) -> np.ndarray:
        """Plug-in asymptotic SE of the sample variance: sqrt((m4 - m2^2)/n)."""
        m2 = self.central_moment(2)
        return np.sqrt(np.maximum(self.central_moment(4) - m2 * m2, 0.0) / self.count)

    def mean_se(self) -> np.ndarray:
        return np.sqrt(self.variance() / self.count)

    def covariance_vs0(self) -> np.ndarray:
        """Unbiased Cov(X(0), X(t)) per grid time."""
        n = self.count
        return (self.c[0] - self.s[0] * self.s0[0] / n) / (n - 1)

    def cov_se_plugin(self) -> np.ndarray:
        """Plug-in asymptotic SE of the covariance: sqrt((m22 - cov^2)/n)."""
        n = self.count
        m1 = self.s[0] / n
        m01 = self.s0[0] / n
        m22 = (
            self.c[3]
            - 2.0 * m01 * self.c[1]
            + m01 * m01 * self.s[1]
            - 2.0 * m1 * self.c[2]
            + 4.0 * m1 * m01 * self.c[0]
            + m1 * m1 * self.s0[1]
        ) / n - 3.0 * (m1 * m01) ** 2
        cov = self.covariance_vs0()
        return np.sqrt(np.maximum(m22 - cov * cov, 0.0) / n)

    def excess_kurtosis(self) -> np.ndarray:
        """Bias-adjusted sample excess kurtosis G2 per grid time."""
        n = self.count
        m2 = self.central_moment(2)
        g2 = self.central_moment(4) / (m2 * m2) - 3.0
        return ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0))

    def kurtosis_se_normal(self) -> float:
        """Large-sample SE of excess kurtosis under a Gaussian null."""
        return math.sqrt(24.0 / self.count)


class ChunkedMoments:
    """Ordered per-chunk accumulators with exact merge and jackknife errors."""

    def __init__(self):
        self.chunks: list[MomentAccumulator] = []

    def add_chunk(self, acc: MomentAccumulator) -> None:
        self.chunks.append(acc)

    def total(self) -> MomentAccumulator:
        if not self.chunks:
            raise ValueError("no chunks accumulated")
        out = self.chunks[0].copy()
        for acc in self.chunks[1:]:
            out.merge(acc)
        return out

    def jackknife(self, stat) -> tuple:
        """Delete-one-chunk jackknife of stat(accumulator) -> per-t array.

        Returns (stat on all data, jackknife SE), both arrays over grid
        times.  Needs at least two chunks.
        """
        nchunks = len(self.chunks)
        if nchunks < 2:
            raise ValueError("jackknife needs at least two chunks")
        full = self.total()
        center = stat(full)
        deleted = np.empty((nchunks,) + np.shape(center))
        for i, acc in enumerate(self.chunks):
            rest = full.copy().subtract(acc)
            deleted[i] = stat(rest)
        dbar = deleted.mean(axis=0)
        se = np.sqrt((nchunks - 1.0) / nchunks * ((deleted - dbar) ** 2).sum(axis=0))
        return center, se


def accumulate(acc: MomentAccumulator, values: np.ndarray, v0=None) -> MomentAccumulator:
    """One-sample convenience wrapper over add_batch."""
    return acc.add_batch(np.atleast_2d(values), None if v0 is None else np.atleast_1d(v0))


def covariance_curve(times: np.ndarray, values: np.ndarray, anchor: float = 0.0, anchor0: float | None = None) -> CurveEstimate:
    """Cov(X(0), X(t)) with plug-in SE from a (samples, steps) array."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 2 or values.shape[0] < 2:
        raise ValueError("need a (samples >= 2, steps) array")
    acc = MomentAccumulator(values.shape[1], anchor=anchor, anchor0=anchor0)
    for lo, hi in chunk_ranges(values.shape[0]):
        acc.add_batch(values[lo:hi])
    return CurveEstimate(t=np.asarray(times), value=acc.covariance_vs0(), se=acc.cov_se_plugin(), count=acc.count)


@dataclass(frozen=True)
class KurtosisTable:
    """Excess kurtosis of a_j(0) + a_j(t) per grid time, for one matrix size."""

    n: int
    j: int
    t: np.ndarray
    kurtosis: np.ndarray
    se_jackknife: np.ndarray
    se_normal: float
    samples: int


def kurtosis_sum_experiment(n_list, j: int, grid: TimeGrid, samples: int, seed, beta: int = 1) -> list:
    """Excess kurtosis curves of a_j(0) + a_j(t) across matrix sizes.

    The j-th diagonal entry comes from a (j-1)-step partial
    tridiagonalization of each frame.  The j = 1 case reads the raw corner
    entry and serves as the Gaussian control.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    out = []
    for ni, n in enumerate(int(v) for v in n_list):
        if n < j:
            raise ValueError(f"n={n} cannot supply entry j={j}")
        chunked = ChunkedMoments()
        for lo, hi in chunk_ranges(samples):
            block = np.empty((hi - lo, grid.steps))
            for s in range(lo, hi):
                rng = derive_rng(seed, ni, s)
                for idx, m in iter_gbe_frames(n, beta, grid, rng):
                    t = tridiagonalize(m, beta=beta, k=j - 1)
                    block[s - lo, idx] = t.diag[j - 1]
            acc = MomentAccumulator(grid.steps)
            acc.add_batch(block + block[:, :1])  # the series a_j(0) + a_j(t)
            chunked.add_chunk(acc)
        kurt, se = chunked.jackknife(lambda a: a.excess_kurtosis())
        out.append(
            KurtosisTable(
                n=n,
                j=j,
                t=grid.times,
                kurtosis=kurt,
                se_jackknife=se,
                se_normal=chunked.total().kurtosis_se_normal(),
                samples=samples,
            )
        )
    return out


def chi_mean(dof: float) -> float:
    """Mean of a chi-distributed variable with ``dof`` degrees of freedom."""
    if dof <= 0:
        raise ValueError("dof must be positive")
    half = 0.5 * dof
    return math.exp(0.5 * math.log(2.0) + math.lgamma(half + 0.5) - math.lgamma(half))


def chi_var(dof: float) -> float:
    """Variance of the chi distribution; tends to 1/2 for large ``dof``."""
    return dof - chi_mean(dof) ** 2
