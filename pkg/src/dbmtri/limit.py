"""The limiting tridiagonal entry processes and the finite-n transforms.

As n grows, the top-corner entries of the time-dependent tridiagonal form
converge (after centering and scaling) to independent scaled OU processes:
the j-th diagonal limit A_j has covariance 2 e^{-(2j-1)|t-s|} and the j-th
off-diagonal limit B_j (of the centered squared entry) has 2 e^{-2j|t-s|}.
This module samples that limit family, maps finite-n tridiagonal data onto
the same scale, and provides the norm-of-OU-vector model for a single
off-diagonal entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grids import TimeGrid
from .ou import ou_sample_vector
from .tridiag import SymTridiagonalPath

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class LimitEntryProcesses:
    """Columns a[:, j-1] and b[:, j-1] hold A_j and B_j on the grid.

    All 2k processes are independent, stationary, marginally N(0, 2);
    A_j decays at rate 2j-1 and B_j at rate 2j.
    """

    grid: TimeGrid
    k: int
    a: np.ndarray  # (steps, k)
    b: np.ndarray  # (steps, k)

    def __post_init__(self):
        want = (self.grid.steps, self.k)
        if self.a.shape != want or self.b.shape != want:
            raise ValueError("component shapes do not match grid and k")


def limit_entries_sample(k: int, grid: TimeGrid, seed, stream: int = 0) -> LimitEntryProcesses:
    if k < 1:
        raise ValueError(f"corner size must be >= 1, got {k}")
    rates = np.concatenate([2.0 * np.arange(1, k + 1) - 1.0, 2.0 * np.arange(1, k + 1)])
    path = ou_sample_vector(rates, None, grid, seed, stream)
    scaled = _SQRT2 * path.values
    return LimitEntryProcesses(grid=grid, k=k, a=scaled[:, :k], b=scaled[:, k:])


@dataclass(frozen=True)
class EntryVectorPath:
    """Finite-n entry vector (a_1..a_k, centered b_1^2..b_k^2) per grid time.

    The off-diagonal half carries (b_j^2 - beta n) / (beta sqrt(n)), the
    scale on which it converges to B_j.
    """

    grid: TimeGrid
    k: int
    n: int
    beta: int
    a: np.ndarray  # (steps, k)
    b_centered: np.ndarray  # (steps, k)


def entry_vector_from_tridiagonal(path: SymTridiagonalPath, k: int, beta: int, n: int) -> EntryVectorPath:
    if n < 1:
        raise ValueError("n must be >= 1")
    if path.size < k + 4:
        raise ValueError(f"frames of size {path.size} cannot supply k={k} entries (need >= k+4)")
    a = path.diag[:, :k].copy()
    b = path.offdiag[:, :k]
    b_centered = (b * b - beta * n) / (beta * math.sqrt(n))
    return EntryVectorPath(grid=path.grid, k=k, n=n, beta=beta, a=a, b_centered=b_centered)


def bhat_transform(b_values: np.ndarray, n: int, beta: int = 1):
    """Map limit B_j values onto the b_j scale: bhat = sqrt(nu + sqrt(nu) B).

    nu = beta n, so for beta=1 this is sqrt(n + sqrt(n) B).  Returns
    (bhat, ok) where ok flags rows whose radicand stayed positive
    throughout; excluded rows hold NaN and should be dropped, not clamped.
    For a 1-d input ok is a scalar bool.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    nu = float(beta * n)
    vals = np.asarray(b_values, dtype=float)
    radicand = nu + math.sqrt(nu) * vals
    ok = np.all(radicand > 0.0, axis=-1)
    out = np.where(radicand > 0.0, np.sqrt(np.maximum(radicand, 0.0)), np.nan)
    if vals.ndim == 1:
        return out, bool(ok)
    return out, ok


@dataclass(frozen=True)
class NormModelPath:
    """The informal single-entry model: b_j(t) modeled as sqrt(beta)||v(t)||
    for an OU vector v of dimension n-j and rate j."""

    grid: TimeGrid
    n: int
    j: int
    beta: int
    norm: np.ndarray  # (steps,)
    centered: np.ndarray  # (steps,): (||v||^2 - (n-j)) / sqrt(2(n-j))


def norm_model_offdiag(n: int, j: int, grid: TimeGrid, seed, beta: int = 1, stream: int = 0) -> NormModelPath:
    dim = n - j
    if dim < 1:
        raise ValueError(f"need n - j >= 1, got n={n}, j={j}")
    v = ou_sample_vector(float(j), dim, grid, seed, stream)
    sq = np.einsum("ti,ti->t", v.values, v.values)
    return NormModelPath(
        grid=grid,
        n=n,
        j=j,
        beta=beta,
        norm=math.sqrt(beta) * np.sqrt(sq),
        centered=(sq - dim) / math.sqrt(2.0 * dim),
    )
