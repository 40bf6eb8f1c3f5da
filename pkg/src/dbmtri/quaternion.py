"""Quaternion arrays stored as float64 with a trailing axis of length 4.

Component order is (w, x, y, z): q = w + x i + y j + z k.  All operations
broadcast over leading axes, so an n-by-n quaternion matrix is shape
(n, n, 4) and a vector is (n, 4).
"""

from __future__ import annotations

import numpy as np

WXYZ = 4


def qzeros(*shape) -> np.ndarray:
    return np.zeros(shape + (WXYZ,))


def qscalar(w: float) -> np.ndarray:
    q = np.zeros(WXYZ)
    q[0] = w
    return q


def qconj(q: np.ndarray) -> np.ndarray:
    out = q.copy()
    out[..., 1:] *= -1.0
    return out


def qabs2(q: np.ndarray) -> np.ndarray:
    """|q|^2 = w^2 + x^2 + y^2 + z^2, one real per quaternion."""
    return np.einsum("...k,...k->...", q, q)


def qre(q: np.ndarray) -> np.ndarray:
    return q[..., 0]


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product, broadcasting over leading axes."""
    pw, px, py, pz = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    qw, qx, qy, qz = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw,
        ],
        axis=-1,
    )


def qmatvec(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    """(A v)_i = sum_j A_ij * v_j with quaternion products.

    Expanding the Hamilton product turns this into 16 real matvecs, which
    keeps the contraction inside BLAS instead of a Python loop over rows.
    """
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    vw, vx, vy, vz = v[..., 0], v[..., 1], v[..., 2], v[..., 3]
    return np.stack(
        [
            aw @ vw - ax @ vx - ay @ vy - az @ vz,
            aw @ vx + ax @ vw + ay @ vz - az @ vy,
            aw @ vy - ax @ vz + ay @ vw + az @ vx,
            aw @ vz + ax @ vy - ay @ vx + az @ vw,
        ],
        axis=-1,
    )


def qvecmat(v: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Row-vector product (v A)_j = sum_i v_i * A_ij (order matters)."""
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    vw, vx, vy, vz = v[..., 0], v[..., 1], v[..., 2], v[..., 3]
    return np.stack(
        [
            vw @ aw - vx @ ax - vy @ ay - vz @ az,
            vw @ ax + vx @ aw + vy @ az - vz @ ay,
            vw @ ay - vx @ az + vy @ aw + vz @ ax,
            vw @ az + vx @ ay - vy @ ax + vz @ aw,
        ],
        axis=-1,
    )


def qouter(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Outer product u v with (i, j) entry u_i * v_j (quaternion product)."""
    return qmul(u[:, None, :], v[None, :, :])


def qherm(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose of an (n, n, 4) quaternion matrix."""
    return qconj(np.swapaxes(a, 0, 1))


def is_qherm(a: np.ndarray, tol: float = 0.0) -> bool:
    return bool(np.max(np.abs(a - qherm(a))) <= tol)
