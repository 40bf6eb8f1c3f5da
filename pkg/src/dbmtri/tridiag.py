"""Householder tridiagonalization with the all-nonnegative off-diagonal convention.

The reflector eliminating column p uses v proportional to x - ||x|| e1
(phase-adjusted for beta = 2, 4), which makes every off-diagonal entry the
column norm, hence >= 0, at the cost of skipping the usual sign
stabilization.  Columns that are already nonnegative multiples of e1 get an
identity step.

``tridiagonalize(A, beta, k)`` runs k eliminations and returns the leading
(k+1) x (k+1) corner of the tridiagonal form; k = n-1 (the default) is the
full reduction.  For beta = 2, 4 the returned matrix is real: the remaining
unitary/symplectic freedom is a diagonal phase similarity that rotates each
off-diagonal onto the positive axis and leaves the (already real) diagonal
alone, so the kernels simply report column norms.

Kernels come from the compiled _hh_cy module when it imported cleanly, with
_hh_py as the numpy fallback; set DBMTRI_FORCE_BACKEND=py (or =cy) to pin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _hh_py
from ._backend import backend_name, cy as _hh_cy
from .gbe import GbePath, is_self_adjoint
from .grids import TimeGrid

__all__ = [
    "HouseholderStep",
    "SymTridiagonal",
    "SymTridiagonalPath",
    "backend_name",
    "householder_vector",
    "tridiagonalize",
    "tridiagonalize_path",
]


DIAG_REAL_TOL = 1e-10  # invariant bound on residual imaginary/quaternion parts


@dataclass(frozen=True)
class HouseholderStep:
    """Reflector H = I - 2 v v^T eliminating below position k, or the identity."""

    v: np.ndarray | None
    k: int = 0

    @property
    def is_identity(self) -> bool:
        return self.v is None

    def apply(self, y: np.ndarray) -> np.ndarray:
        if self.v is None:
            return y.copy()
        return y - 2.0 * self.v * (self.v @ y)

    def matrix(self) -> np.ndarray:
        n = 1 if self.v is None else self.v.shape[0]
        h = np.eye(n)
        if self.v is not None:
            h -= 2.0 * np.multiply.outer(self.v, self.v)
        return h


def householder_vector(x: np.ndarray) -> HouseholderStep:
    """Reflector sending x to (||x||, 0, ..., 0); identity when x already is."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("x must be a nonempty vector")
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")
    normx = float(np.linalg.norm(x))
    unorm2 = 2.0 * normx * (normx - x[0])
    if normx == 0.0 or unorm2 <= (_hh_py.EPS_REL * normx) ** 2:
        return HouseholderStep(v=None)
    v = x.copy()
    v[0] -= normx
    return HouseholderStep(v=v / np.sqrt(unorm2))


@dataclass(frozen=True)
class SymTridiagonal:
    """Real symmetric tridiagonal: diag a[0..m-1], offdiag b[0..m-2], all b >= 0."""

    diag: np.ndarray
    offdiag: np.ndarray
    zero_norm_steps: int = 0

    def __post_init__(self):
        if self.offdiag.shape[0] != max(self.diag.shape[0] - 1, 0):
            raise ValueError("offdiag length must be diag length - 1")
        if self.offdiag.size and self.offdiag.min() < 0:
            raise ValueError("off-diagonal entries must be >= 0")

    @property
    def size(self) -> int:
        return self.diag.shape[0]

    def to_dense(self) -> np.ndarray:
        t = np.diag(self.diag)
        m = self.size
        idx = np.arange(m - 1)
        t[idx, idx + 1] = self.offdiag
        t[idx + 1, idx] = self.offdiag
        return t


@dataclass(frozen=True)
class SymTridiagonalPath:
    """One SymTridiagonal frame per grid point, stored as stacked arrays."""

    grid: TimeGrid
    diag: np.ndarray  # (steps, m)
    offdiag: np.ndarray  # (steps, m-1)
    zero_norm_steps: int = 0

    def __post_init__(self):
        if self.diag.shape[0] != self.grid.steps or self.offdiag.shape[0] != self.grid.steps:
            raise ValueError("frame count does not match grid")
        if self.offdiag.shape[1] != self.diag.shape[1] - 1:
            raise ValueError("offdiag width must be diag width - 1")

    @property
    def size(self) -> int:
        return self.diag.shape[1]

    def frame(self, k: int) -> SymTridiagonal:
        return SymTridiagonal(diag=self.diag[k], offdiag=self.offdiag[k])


def _matrix_size(a: np.ndarray, beta: int) -> int:
    expected_ndim = 3 if beta == 4 else 2
    if a.ndim != expected_ndim or a.shape[0] != a.shape[1] or (beta == 4 and a.shape[2] != 4):
        raise ValueError(f"bad matrix shape {a.shape} for beta={beta}")
    return a.shape[0]


def tridiagonalize(a: np.ndarray, beta: int = 1, k: int | None = None, want_q: bool = False):
    """Reduce a self-adjoint matrix to its (partial) symmetric tridiagonal form.

    k is the number of elimination steps; the result holds diag entries
    0..k and offdiag entries 0..k-1, the leading corner of the full
    tridiagonal matrix.  Default k = n-1 reduces everything.  With
    want_q=True (beta=1 only) also returns the orthogonal Q with
    T = Q A Q^T.
    """
    a = np.ascontiguousarray(a)
    n = _matrix_size(a, beta)
    tol = 1e-12 * max(1.0, float(np.max(np.abs(a)))) if a.size else 0.0
    if not is_self_adjoint(a, beta, tol=tol):
        raise ValueError("input matrix is not self-adjoint")
    if k is None:
        k = n - 1
    if not 0 <= k <= n - 1:
        raise ValueError(f"step count k={k} outside [0, {n - 1}]")
    if want_q and beta != 1:
        raise ValueError("the accumulated transform is only available for beta=1")

    diag = np.empty(k + 1)
    offdiag = np.empty(k)
    if beta == 1:
        s = a.astype(float, copy=True)
        if want_q:
            q = np.eye(n)
            nzero = _hh_py.tridiag_real(s, k, diag, offdiag, q)
        elif _hh_cy is not None:
            nzero = _hh_cy.tridiag_real(s, k, diag, offdiag)
        else:
            nzero = _hh_py.tridiag_real(s, k, diag, offdiag)
        max_imag = 0.0
    elif beta == 2:
        s = a.astype(complex, copy=True)
        kern = _hh_cy if _hh_cy is not None else _hh_py
        nzero, max_imag = kern.tridiag_complex(s, k, diag, offdiag)
    else:
        s = a.astype(float, copy=True)
        nzero, max_imag = _hh_py.tridiag_quaternion(s, k, diag, offdiag)
    if max_imag > DIAG_REAL_TOL:
        raise ValueError(f"diagonal has non-real residue {max_imag:.3e} (input not self-adjoint?)")
    out = SymTridiagonal(diag=diag, offdiag=offdiag, zero_norm_steps=nzero)
    return (out, q) if want_q else out


def tridiagonalize_path(path_or_frames, beta: int | None = None, k: int | None = None, grid: TimeGrid | None = None) -> SymTridiagonalPath:
    """Apply tridiagonalize frame-by-frame to a matrix path.

    Accepts a GbePath, or any iterable of (index, matrix) frames together
    with explicit grid and beta (the streaming iterator from gbe fits).
    """
    if isinstance(path_or_frames, GbePath):
        grid = path_or_frames.grid
        beta = path_or_frames.beta
        frames: Iterable = enumerate(path_or_frames.matrices)
    else:
        if grid is None or beta is None:
            raise ValueError("grid and beta are required for a bare frame iterable")
        frames = path_or_frames
    diag = offdiag = None
    nzero = 0
    for idx, m in frames:
        t = tridiagonalize(m, beta=beta, k=k)
        if diag is None:
            diag = np.empty((grid.steps, t.diag.shape[0]))
            offdiag = np.empty((grid.steps, t.offdiag.shape[0]))
        diag[idx] = t.diag
        offdiag[idx] = t.offdiag
        nzero += t.zero_norm_steps
    if diag is None:
        raise ValueError("empty frame iterable")
    return SymTridiagonalPath(grid=grid, diag=diag, offdiag=offdiag, zero_norm_steps=nzero)
