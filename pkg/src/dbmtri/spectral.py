"""Eigenvalues of symmetric tridiagonal matrices via Sturm-count bisection,
corner truncation, and the edge rescaling for largest-eigenvalue processes.

The Sturm count at shift x is the number of negative pivots of the LDL^T
factorization of T - xI, which equals the number of eigenvalues below x;
bisection on that count extracts any order statistic without touching the
rest of the spectrum.  Corner truncation plus the compiled count kernel make
the per-frame largest-eigenvalue extraction cheap enough to run inside
Monte Carlo loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import cy as _hh_cy
from .gbe import iter_gbe_frames
from .grids import TimeGrid
from .limit import bhat_transform, limit_entries_sample
from .rng import derive_rng
from .stats import CurveEstimate, covariance_curve
from .tridiag import SymTridiagonal, SymTridiagonalPath, tridiagonalize

_EPS = float(np.finfo(float).eps)


def _pivmin(offdiag: np.ndarray) -> float:
    maxb2 = float(np.max(offdiag * offdiag)) if offdiag.size else 0.0
    return max(1e-300, _EPS * maxb2)


def _count_py(diag: np.ndarray, offdiag: np.ndarray, x: float, pivmin: float) -> int:
    d = diag[0] - x
    if abs(d) < pivmin:
        d = -pivmin
    count = 1 if d < 0.0 else 0
    for i in range(1, diag.shape[0]):
        d = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
    return count


def sturm_count(t: SymTridiagonal, x: float) -> int:
    """Number of eigenvalues of t strictly below x (zero pivots safeguarded)."""
    pivmin = _pivmin(t.offdiag)
    if _hh_cy is not None:
        return _hh_cy.sturm_count(t.diag, t.offdiag, float(x), pivmin)
    return _count_py(t.diag, t.offdiag, float(x), pivmin)


@dataclass(frozen=True)
class EigenRequest:
    matrix: SymTridiagonal
    how_many: int = 1
    which: str = "largest"
    tol: float | None = None

    def __post_init__(self):
        if not 1 <= self.how_many <= self.matrix.size:
            raise ValueError(f"how_many={self.how_many} outside [1, {self.matrix.size}]")
        if self.which not in ("largest", "smallest"):
            raise ValueError("which must be 'largest' or 'smallest'")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be positive")


def _gershgorin(t: SymTridiagonal) -> tuple:
    m = t.size
    radius = np.zeros(m)
    if m > 1:
        radius[:-1] += np.abs(t.offdiag)
        radius[1:] += np.abs(t.offdiag)
    return float(np.min(t.diag - radius)), float(np.max(t.diag + radius))


def eigs_extreme(req: EigenRequest) -> np.ndarray:
    """Extreme eigenvalues by bisection; most extreme first.

    'largest' returns descending values, 'smallest' ascending, each within
    tol (default 1e-10 times the spectral scale) of the truth.
    """
    t = req.matrix
    lo0, hi0 = _gershgorin(t)
    scale = max(1.0, abs(lo0), abs(hi0))
    tol = req.tol if req.tol is not None else 1e-10 * scale
    pivmin = _pivmin(t.offdiag)
    count = (lambda x: _hh_cy.sturm_count(t.diag, t.offdiag, x, pivmin)) if _hh_cy is not None else (
        lambda x: _count_py(t.diag, t.offdiag, x, pivmin)
    )
    m = t.size
    if req.which == "largest":
        targets = range(m - 1, m - 1 - req.how_many, -1)
    else:
        targets = range(req.how_many)
    out = np.empty(req.how_many)
    for pos, i in enumerate(targets):
        lo, hi = lo0, hi0
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if count(mid) > i:
                hi = mid
            else:
                lo = mid
        out[pos] = 0.5 * (lo + hi)
    return out


def corner(t: SymTridiagonal, k: int) -> SymTridiagonal:
    """Leading k x k principal submatrix."""
    if not 1 <= k <= t.size:
        raise ValueError(f"corner size {k} outside [1, {t.size}]")
    return SymTridiagonal(diag=t.diag[:k].copy(), offdiag=t.offdiag[: k - 1].copy())


def corner_size_rule(n: int) -> int:
    """The 10 n^(1/3) corner size, rounded up (exact cubes stay exact)."""
    return math.ceil(10.0 * n ** (1.0 / 3.0) - 1e-9)


@dataclass(frozen=True)
class EigenProcessPath:
    """Sorted-descending eigenvalues per grid time (column 0 is the max)."""

    grid: TimeGrid
    values: np.ndarray  # (steps, how_many)

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[0] != self.grid.steps:
            raise ValueError("values shape does not match grid")
        if np.any(np.diff(self.values, axis=1) > 0):
            raise ValueError("eigenvalues must be sorted descending")


def eigen_process_from_tridiagonal_path(path: SymTridiagonalPath, how_many: int = 1) -> EigenProcessPath:
    vals = np.empty((path.grid.steps, how_many))
    for idx in range(path.grid.steps):
        vals[idx] = eigs_extreme(EigenRequest(path.frame(idx), how_many=how_many, which="largest"))
    return EigenProcessPath(grid=path.grid, values=vals)


def airy_rescale(path: EigenProcessPath, n: int) -> EigenProcessPath:
    """Edge rescaling x -> n^(1/6) (x - 2 sqrt(n)) with time sped up by n^(1/3).

    The input grid is read as the slow time of the size-n process; the
    output grid carries the same frames at t -> n^(1/3) t.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    speed = float(n) ** (1.0 / 3.0)
    new_grid = TimeGrid(t0=path.grid.t0 * speed, dt=path.grid.dt * speed, steps=path.grid.steps)
    values = float(n) ** (1.0 / 6.0) * (path.values - 2.0 * math.sqrt(n))
    return EigenProcessPath(grid=new_grid, values=values)


@dataclass(frozen=True)
class EigenCovTables:
    """Cov(lambda_max(0), lambda_max(t)) for the three model levels.

    full: the size-n matrix process; tri[k]: its k x k tridiagonal corner;
    limit[k]: the k x k matrix built from the limit entry processes (A_j on
    the diagonal, the bhat transform of B_j off it).  flagged counts limit
    samples dropped for a non-positive bhat radicand.
    """

    n: int
    ks: tuple
    grid: TimeGrid
    full: CurveEstimate
    tri: dict
    limit: dict
    flagged: int
    samples: int


def eigen_cov_experiment(n: int, k_list, grid: TimeGrid, samples: int, seed, beta: int = 1) -> EigenCovTables:
    """Covariance curves of largest-eigenvalue processes at three model levels.

    Each sample runs one full tridiagonalization per frame, which serves
    both the full-process eigenvalue and every corner size; an independent
    limit-model sample of matching corner size supplies the third curve.
    """
    ks = tuple(sorted(int(k) for k in k_list))
    if not ks or ks[0] < 1:
        raise ValueError("corner sizes must be >= 1")
    if ks[-1] > n:
        raise ValueError("corner size exceeds matrix size")
    kmax = ks[-1]
    lam_full = np.empty((samples, grid.steps))
    lam_tri = {k: np.empty((samples, grid.steps)) for k in ks}
    lam_lim = {k: np.empty((samples, grid.steps)) for k in ks}
    ok = np.ones(samples, dtype=bool)
    for s in range(samples):
        rng = derive_rng(seed, 0, s)
        for idx, m in iter_gbe_frames(n, beta, grid, rng):
            t = tridiagonalize(m, beta=beta)
            lam_full[s, idx] = eigs_extreme(EigenRequest(t))[0]
            for k in ks:
                lam_tri[k][s, idx] = eigs_extreme(EigenRequest(corner(t, k)))[0]
        lim = limit_entries_sample(kmax, grid, derive_rng(seed, 1, s))
        bhat, good = bhat_transform(lim.b, n, beta=beta)
        if not bool(np.all(good)):
            ok[s] = False
            continue
        for k in ks:
            for idx in range(grid.steps):
                frame = SymTridiagonal(diag=lim.a[idx, :k].copy(), offdiag=bhat[idx, : k - 1].copy())
                lam_lim[k][s, idx] = eigs_extreme(EigenRequest(frame))[0]
    anchor = 2.0 * math.sqrt(n)
    times = grid.times
    full_curve = covariance_curve(times, lam_full, anchor=anchor)
    tri_curves = {k: covariance_curve(times, lam_tri[k], anchor=anchor) for k in ks}
    lim_curves = {k: covariance_curve(times, lam_lim[k][ok], anchor=anchor) for k in ks}
    return EigenCovTables(
        n=n,
        ks=ks,
        grid=grid,
        full=full_curve,
        tri=tri_curves,
        limit=lim_curves,
        flagged=int(samples - ok.sum()),
        samples=samples,
    )
