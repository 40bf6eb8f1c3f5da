"""Approximate tridiagonal entries from polynomial averages of the corner vector.

For an N x N self-adjoint M write n = N - 1, theta = M[1:, 0]/sqrt(n) (the
normalized first column below the corner) and let Mb be the trailing n x n
block (the action of M with its first row and column zeroed, restricted to
where theta lives).  The approximations are quadratic forms in Chebyshev
polynomials of Mb/sqrt(n):

    tilde_a_1 = M[0, 0] (exact),
    tilde_a_j = sqrt(n) theta^T P_{2j-3}(Mb/sqrt(n)) theta,        j >= 2,
    (tilde_b_j^2 - n)/sqrt(n) = sqrt(n)(theta^T P_{2j-2}(Mb/sqrt(n)) theta - [j = 1]).

One vector three-term recurrence pass collects every degree at O(k n^2)
cost; P_k(Mb) is never formed.  At j = 1 both formulas are exact (b_1^2 =
n ||theta||^2), which the error study uses as a null check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gbe import is_self_adjoint, iter_gbe_frames
from .grids import TimeGrid
from .rng import derive_rng
from .tridiag import tridiagonalize


def tilde_m(m: np.ndarray) -> np.ndarray:
    """(I - e1 e1^T) M (I - e1 e1^T): first row and column zeroed out."""
    out = m.copy()
    out[0, :] = 0.0
    out[:, 0] = 0.0
    return out


@dataclass(frozen=True)
class ApproxEntryFrame:
    """tilde_a[j-1] and (tilde_b_j^2 - n)/sqrt(n) at one time, j = 1..k."""

    n: int
    tilde_a: np.ndarray
    tilde_b_sq_centered: np.ndarray

    def __post_init__(self):
        if self.tilde_a.shape != self.tilde_b_sq_centered.shape:
            raise ValueError("entry vectors must have equal length")
        if not (np.all(np.isfinite(self.tilde_a)) and np.all(np.isfinite(self.tilde_b_sq_centered))):
            raise ValueError("approximate entries must be finite")


def approx_entries_frame(m: np.ndarray, k: int, check: bool = True) -> ApproxEntryFrame:
    """Approximate entries 1..k from one beta=1 matrix frame."""
    if k < 1:
        raise ValueError("k must be >= 1")
    big_n = m.shape[0]
    n = big_n - 1
    if n <= 2 * k + 3:
        raise ValueError(f"matrix size {big_n} too small for k={k} (need n = size-1 > 2k+3)")
    if check and not is_self_adjoint(m, 1, tol=1e-12 * max(1.0, float(np.max(np.abs(m))))):
        raise ValueError("input matrix is not self-adjoint")
    sqrt_n = math.sqrt(n)
    theta = m[1:, 0] / sqrt_n
    mb = m[1:, 1:]

    # d[deg] = theta^T P_deg(Mb/sqrt(n)) theta, harvested from one recurrence
    top_deg = 2 * k - 2
    d = np.empty(top_deg + 1)
    w_prev = np.zeros_like(theta)
    w = theta.copy()
    d[0] = theta @ w
    for deg in range(1, top_deg + 1):
        w, w_prev = (mb @ w) / sqrt_n - w_prev, w
        d[deg] = theta @ w

    tilde_a = np.empty(k)
    tilde_a[0] = m[0, 0]
    for j in range(2, k + 1):
        tilde_a[j - 1] = sqrt_n * d[2 * j - 3]
    tilde_b = sqrt_n * d[0 : 2 * k - 1 : 2].copy()
    tilde_b[0] -= sqrt_n
    return ApproxEntryFrame(n=n, tilde_a=tilde_a, tilde_b_sq_centered=tilde_b)


@dataclass(frozen=True)
class ApproxErrorStudy:
    """Per-size quantiles of the sup-over-grid approximation error.

    sup_a[i, j-1] is the median (over samples) of sup_t |a_j(t) - tilde_a_j(t)|
    at size ns[i]; sup_b uses the centered squared off-diagonals, i.e.
    |b_j(t)^2 - tilde_b_j(t)^2| / sqrt(n).  The p90 arrays hold the 90th
    percentile of the same sup errors.
    """

    ns: tuple
    k: int
    samples: int
    sup_a: np.ndarray
    sup_b: np.ndarray
    p90_a: np.ndarray
    p90_b: np.ndarray


def approx_error_study(ns, k: int, grid: TimeGrid, samples: int, seed) -> ApproxErrorStudy:
    """Compare approximate against true entries on fresh beta=1 paths.

    For each n, each sample draws a stationary (n+1) x (n+1) matrix path,
    takes the true partial tridiagonalization and the approximate entries at
    every frame, and records the per-index sup error over the grid.
    """
    ns = tuple(int(n) for n in ns)
    for n in ns:
        if n <= 2 * k + 3:
            raise ValueError(f"n={n} too small for k={k}")
    med_a = np.empty((len(ns), k))
    med_b = np.empty((len(ns), k))
    p90_a = np.empty((len(ns), k))
    p90_b = np.empty((len(ns), k))
    for i, n in enumerate(ns):
        err_a = np.zeros((samples, k))
        err_b = np.zeros((samples, k))
        for s in range(samples):
            rng = derive_rng(seed, i, s)
            for _, m in iter_gbe_frames(n + 1, 1, grid, rng):
                frame = approx_entries_frame(m, k, check=False)
                true = tridiagonalize(m, beta=1, k=k)
                true_b_centered = (true.offdiag**2 - n) / math.sqrt(n)
                np.maximum(err_a[s], np.abs(true.diag[:k] - frame.tilde_a), out=err_a[s])
                np.maximum(err_b[s], np.abs(true_b_centered - frame.tilde_b_sq_centered), out=err_b[s])
        med_a[i] = np.median(err_a, axis=0)
        med_b[i] = np.median(err_b, axis=0)
        p90_a[i] = np.percentile(err_a, 90, axis=0)
        p90_b[i] = np.percentile(err_b, 90, axis=0)
    return ApproxErrorStudy(ns=ns, k=k, samples=samples, sup_a=med_a, sup_b=med_b, p90_a=p90_a, p90_b=p90_b)
