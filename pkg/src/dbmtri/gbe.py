"""Stationary Gaussian beta-ensemble matrices and their OU evolution in time.

Conventions (per real component): diagonal entries are N(0, 2), each of the
beta real components of an off-diagonal entry is N(0, 1).  Self-adjointness
is structural: only the diagonal and the strict upper triangle are drawn,
and the lower triangle is the conjugate mirror of the same draws.  The
noise is never symmetrized after the fact.

Storage: beta=1 -> float64 (n, n); beta=2 -> complex128 (n, n);
beta=4 -> float64 (n, n, 4) quaternion components (w, x, y, z).

The matrix OU process solves dM = -M dt + sqrt(2) dB and is advanced with
the exact transition M(t+dt) = e^{-dt} M(t) + sqrt(1-e^{-2dt}) G, where G is
a fresh stationary sample, so there is no time-discretization error and the
entry covariance across time is (1 + delta_ij) e^{-|t-s|} per real
component.

Both the stationary fill and the transition are one fused pass
a <- decay*a + fresh*noise (decay=0 for the fill), with identical draw
layout in the compiled and numpy code paths, so a seed yields the same
process regardless of backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._backend import cy as _cy
from .grids import TimeGrid
from .rng import as_rng

BETAS = (1, 2, 4)
_SQRT2 = math.sqrt(2.0)


def _check_args(n: int, beta: int) -> None:
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if beta not in BETAS:
        raise ValueError(f"beta must be one of {BETAS}, got {beta}")


@dataclass(frozen=True)
class GbeEntry:
    """One matrix entry as its beta real components.

    beta=1: (value,); beta=2: (re, im); beta=4: (w, x, y, z).  Diagonal
    entries carry a single real component for every beta.
    """

    beta: int
    components: tuple

    def __post_init__(self):
        if self.beta not in BETAS:
            raise ValueError(f"beta must be one of {BETAS}")
        k = len(self.components)
        if k != self.beta and k != 1:
            raise ValueError(f"expected {self.beta} components (or 1 on the diagonal), got {k}")


def matrix_entry(m: np.ndarray, beta: int, i: int, j: int) -> GbeEntry:
    """Extract entry (i, j) of a stored matrix as real components."""
    if beta == 1:
        return GbeEntry(1, (float(m[i, j]),))
    if beta == 2:
        z = m[i, j]
        if i == j:
            return GbeEntry(2, (float(z.real),))
        return GbeEntry(2, (float(z.real), float(z.imag)))
    if i == j:
        return GbeEntry(4, (float(m[i, j, 0]),))
    return GbeEntry(4, tuple(float(c) for c in m[i, j]))


class _Layout:
    """Cached strict-upper-triangle indices and per-frame draw count."""

    def __init__(self, n: int, beta: int):
        self.n = n
        self.beta = beta
        self.rows, self.cols = np.triu_indices(n, k=1)
        self.diag = np.arange(n)
        self.draws = beta * self.rows.size + n


def _apply_noise(a: np.ndarray, z: np.ndarray, lay: _Layout, decay: float, fresh: float) -> None:
    """a <- decay*a + fresh*G(z), writing both triangles from one triangle of draws."""
    beta = lay.beta
    if _cy is not None and beta == 1:
        _cy.sym_update(a, z, decay, fresh)
        return
    if _cy is not None and beta == 2:
        _cy.herm_update(a, z, decay, fresh)
        return
    a *= decay
    noff = lay.rows.size
    if beta == 1:
        off = fresh * z[:noff]
        a[lay.rows, lay.cols] += off
        a[lay.cols, lay.rows] += off
        a[lay.diag, lay.diag] += fresh * _SQRT2 * z[noff:]
    elif beta == 2:
        off = fresh * z[: 2 * noff].view(complex)
        a[lay.rows, lay.cols] += off
        a[lay.cols, lay.rows] += off.conj()
        a[lay.diag, lay.diag] += fresh * _SQRT2 * z[2 * noff :]
    else:
        off = fresh * z[: 4 * noff].reshape(noff, 4)
        a[lay.rows, lay.cols] += off
        mirror = off.copy()
        mirror[:, 1:] *= -1.0
        a[lay.cols, lay.rows] += mirror
        a[lay.diag, lay.diag, 0] += fresh * _SQRT2 * z[4 * noff :]


def _alloc(n: int, beta: int) -> np.ndarray:
    if beta == 2:
        return np.zeros((n, n), dtype=complex)
    if beta == 4:
        return np.zeros((n, n, 4))
    return np.zeros((n, n))


def gbe_sample_stationary(n: int, beta: int, seed) -> np.ndarray:
    """One self-adjoint stationary GbetaE matrix of size n."""
    _check_args(n, beta)
    rng = as_rng(seed)
    lay = _Layout(n, beta)
    a = _alloc(n, beta)
    _apply_noise(a, rng.standard_normal(lay.draws), lay, 0.0, 1.0)
    return a


@dataclass(frozen=True)
class GbePath:
    grid: TimeGrid
    n: int
    beta: int
    matrices: np.ndarray  # shape (steps,) + matrix shape

    def __post_init__(self):
        if self.matrices.shape[0] != self.grid.steps:
            raise ValueError("frame count does not match grid")

    def frame(self, k: int) -> np.ndarray:
        return self.matrices[k]


def iter_gbe_frames(n: int, beta: int, grid: TimeGrid, seed) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (step index, matrix) frames of the stationary matrix OU process.

    The matrix buffer is updated in place between yields, so consumers must
    copy a frame if they need it after advancing the iterator.
    """
    _check_args(n, beta)
    rng = as_rng(seed)
    lay = _Layout(n, beta)
    m = _alloc(n, beta)
    _apply_noise(m, rng.standard_normal(lay.draws), lay, 0.0, 1.0)
    yield 0, m
    if grid.steps == 1:
        return
    decay = math.exp(-grid.dt)
    fresh = math.sqrt(-math.expm1(-2.0 * grid.dt))
    for k in range(1, grid.steps):
        _apply_noise(m, rng.standard_normal(lay.draws), lay, decay, fresh)
        yield k, m


def gbe_sample_path(n: int, beta: int, grid: TimeGrid, seed) -> GbePath:
    """Materialize a full GbePath (one matrix per grid point)."""
    shape = (n, n, 4) if beta == 4 else (n, n)
    frames = np.empty((grid.steps,) + shape, dtype=complex if beta == 2 else float)
    for k, m in iter_gbe_frames(n, beta, grid, seed):
        frames[k] = m
    return GbePath(grid=grid, n=n, beta=beta, matrices=frames)


def is_self_adjoint(m: np.ndarray, beta: int, tol: float = 0.0) -> bool:
    if beta == 4:
        from .quaternion import qherm

        return bool(np.max(np.abs(m - qherm(m))) <= tol)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)
