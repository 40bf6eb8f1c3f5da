"""Monic Chebyshev-type polynomials orthogonal for the semicircle law.

P_k(x) = U_k(x/2) where U_k is the Chebyshev polynomial of the second kind,
so P_{k+1} = x P_k - P_{k-1} with P_0 = 1, P_1 = x.  These are orthonormal
against (1/2pi) sqrt(4 - x^2) on [-2, 2].  Coefficients are kept as exact
Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np


@dataclass(frozen=True)
class MonicSemicirclePoly:
    """Degree and monomial coefficients, coeffs[i] multiplying x^i."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector does not match degree")
        if self.coeffs[-1] != 1:
            raise ValueError("polynomial is not monic")
        if any(c != 0 for i, c in enumerate(self.coeffs) if (self.degree - i) % 2):
            raise ValueError("parity violated: P_k contains only x^{k-2l} terms")

    def __call__(self, x):
        # Horner on the dense coefficient list; fine for scalars and arrays.
        acc = np.zeros_like(np.asarray(x, dtype=float))
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def poly_p(k: int) -> MonicSemicirclePoly:
    """P_k by the three-term recurrence, exact integer coefficients."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if k == 0:
        return MonicSemicirclePoly(0, (1,))
    if k == 1:
        return MonicSemicirclePoly(1, (0, 1))
    pm1 = list(poly_p(k - 2).coeffs)
    p = list(poly_p(k - 1).coeffs)
    out = [0] * (k + 1)
    for i, c in enumerate(p):  # x * P_{k-1}
        out[i + 1] += c
    for i, c in enumerate(pm1):
        out[i] -= c
    return MonicSemicirclePoly(k, tuple(out))


def poly_p_explicit(k: int) -> MonicSemicirclePoly:
    """P_k from the closed form sum_{l} (-1)^l C(k-l, l) x^{k-2l}."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    out = [0] * (k + 1)
    for l in range(k // 2 + 1):
        out[k - 2 * l] = (-1) ** l * comb(k - l, l)
    return MonicSemicirclePoly(k, tuple(out))


def poly_product_expand(j: int, k: int) -> list:
    """Degrees in the linearization P_j P_k = sum_{l=0}^{min(j,k)} P_{j+k-2l}."""
    if j < 0 or k < 0:
        raise ValueError("degrees must be >= 0")
    return [j + k - 2 * l for l in range(min(j, k) + 1)]


def _poly_mul(a: tuple, b: tuple) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for i2, cb in enumerate(b):
            out[i + i2] += ca * cb
    return out


def poly_product_check(j: int, k: int) -> bool:
    """Exact coefficient check of the linearization for one (j, k) pair."""
    lhs = _poly_mul(poly_p(j).coeffs, poly_p(k).coeffs)
    rhs = [0] * (j + k + 1)
    for d in poly_product_expand(j, k):
        for i, c in enumerate(poly_p(d).coeffs):
            rhs[i] += c
    return lhs == rhs


def matrix_poly_apply(k: int, a: np.ndarray, v: np.ndarray) -> np.ndarray:
    """P_k(A) v via w_{m+1} = A w_m - w_{m-1}; k matvecs, P_k(A) never formed."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[1] != v.shape[0]:
        raise ValueError(f"shape mismatch: A is {a.shape}, v is {v.shape}")
    w_prev = np.zeros_like(v)
    w = v.copy()
    for _ in range(k):
        w, w_prev = a @ w - w_prev, w
    return w


def matrix_poly_iter(a: np.ndarray, v: np.ndarray, k_max: int):
    """Yield (m, P_m(A) v) for m = 0..k_max, one matvec per step.

    Lets a caller harvest every degree of one recurrence pass instead of
    restarting matrix_poly_apply per degree.
    """
    w_prev = np.zeros_like(v)
    w = v.copy()
    yield 0, w
    for m in range(1, k_max + 1):
        w, w_prev = a @ w - w_prev, w
        yield m, w


def semicircle_quadrature(m: int):
    """Nodes and weights exact for polynomials of degree <= 2m-1.

    Nodes x_i = 2 cos(i pi / (m+1)), weights (2/(m+1)) sin^2(i pi/(m+1)),
    i = 1..m: the Gauss rule for the semicircle weight on [-2, 2].
    """
    i = np.arange(1, m + 1)
    phi = i * np.pi / (m + 1)
    return 2.0 * np.cos(phi), (2.0 / (m + 1)) * np.sin(phi) ** 2
