"""Reference Householder tridiagonalization kernels in plain numpy.

Each kernel runs k elimination steps in place on its input buffer and fills
a[0..k] (diagonal) and b[0..k-1] (off-diagonal, always >= 0), i.e. the
leading (k+1) x (k+1) corner of the full tridiagonal form.  The reflector
direction is v = (x - ||x|| e1) / ||x - ||x|| e1|| (for beta > 1 with the
phase alpha = x0/|x0| in front of ||x||), so every off-diagonal comes out as
the nonnegative column norm.  A step whose column is already a nonnegative
multiple of e1 is skipped; a column with exactly zero norm is skipped and
counted.

The compiled module _hh_cy exports the same beta = 1, 2 entry points; this
module is the fallback and the beta = 4 home.
"""

from __future__ import annotations

import math

import numpy as np

from .quaternion import qabs2, qconj, qherm, qmul, qouter, qvecmat

EPS_REL = 1e-13


def tridiag_real(s: np.ndarray, k: int, a: np.ndarray, b: np.ndarray, q: np.ndarray | None = None) -> int:
    """beta=1 kernel; returns the number of zero-norm (recorded) steps.

    If q is an identity matrix on entry, it accumulates the similarity
    transform: on exit  tridiagonal = q @ s_input @ q.T  (rows of q updated
    per reflector).
    """
    n = s.shape[0]
    nzero = 0
    for p in range(k):
        a[p] = s[p, p]
        x = s[p + 1 :, p]
        normx = math.sqrt(x @ x)
        b[p] = normx
        if normx == 0.0:
            nzero += 1
            continue
        unorm2 = 2.0 * normx * (normx - x[0])
        if unorm2 <= (EPS_REL * normx) ** 2:
            continue  # x already a nonnegative multiple of e1
        v = x.copy()
        v[0] -= normx
        v /= math.sqrt(unorm2)
        t = s[p + 1 :, p + 1 :]
        w = t @ v
        w -= (v @ w) * v
        t -= np.multiply.outer(2.0 * v, w)
        t -= np.multiply.outer(2.0 * w, v)
        if q is not None:
            rows = q[p + 1 :, :]
            rows -= np.multiply.outer(2.0 * v, v @ rows)
    a[k] = s[k, k]
    return nzero


def tridiag_complex(s: np.ndarray, k: int, a: np.ndarray, b: np.ndarray) -> tuple:
    """beta=2 kernel; returns (zero-norm count, max |imag| seen on the diagonal)."""
    max_imag = 0.0
    nzero = 0
    for p in range(k):
        d = s[p, p]
        a[p] = d.real
        max_imag = max(max_imag, abs(d.imag))
        x = s[p + 1 :, p]
        normx = math.sqrt(np.vdot(x, x).real)
        b[p] = normx
        if normx == 0.0:
            nzero += 1
            continue
        ax0 = abs(x[0])
        unorm2 = 2.0 * normx * (normx - ax0)
        if unorm2 <= (EPS_REL * normx) ** 2:
            continue
        alpha = x[0] / ax0 if ax0 > 0.0 else 1.0
        v = x.copy()
        v[0] -= alpha * normx
        v /= math.sqrt(unorm2)
        t = s[p + 1 :, p + 1 :]
        w = t @ v
        w -= np.vdot(v, w).real * v
        t -= np.multiply.outer(2.0 * v, w.conj())
        t -= np.multiply.outer(2.0 * w, v.conj())
    d = s[k, k]
    a[k] = d.real
    max_imag = max(max_imag, abs(d.imag))
    return nzero, max_imag


def tridiag_quaternion(s: np.ndarray, k: int, a: np.ndarray, b: np.ndarray) -> tuple:
    """beta=4 kernel on (n, n, 4) storage; returns (zero-norm count, max
    off-real diagonal magnitude)."""
    max_imag = 0.0
    nzero = 0
    for p in range(k):
        d = s[p, p]
        a[p] = d[0]
        max_imag = max(max_imag, float(np.max(np.abs(d[1:]))))
        x = s[p + 1 :, p, :]
        normx = math.sqrt(float(qabs2(x).sum()))
        b[p] = normx
        if normx == 0.0:
            nzero += 1
            continue
        ax0 = math.sqrt(float(qabs2(x[0])))
        unorm2 = 2.0 * normx * (normx - ax0)
        if unorm2 <= (EPS_REL * normx) ** 2:
            continue
        alpha = x[0] / ax0 if ax0 > 0.0 else np.array([1.0, 0.0, 0.0, 0.0])
        v = x.copy()
        v[0] -= alpha * normx
        v /= math.sqrt(unorm2)
        t = s[p + 1 :, p + 1 :, :]
        r = qvecmat(qconj(v), t)
        kappa = float(qmul(r, v)[..., 0].sum())  # v* S v, real for self-adjoint S
        r -= kappa * qconj(v)
        outer = qouter(v, r)
        t -= 2.0 * outer
        t -= 2.0 * qherm(outer)
    d = s[k, k]
    a[k] = d[0]
    max_imag = max(max_imag, float(np.max(np.abs(d[1:]))))
    return nzero, max_imag
