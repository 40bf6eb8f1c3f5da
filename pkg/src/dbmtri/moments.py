"""Exact leading-order moment formulas built on pair-partition enumeration.

Mixed moments of the large-n semicircular family are sums over non-crossing
pairings weighted by the time kernel e^{-|t-t'|}.  Where only two distinct
times appear, everything is an integer polynomial in q = e^{-|t1-t2|}, which
we exploit to make equal-time identities exact (q = 1, pure integer
arithmetic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .chebyshev import poly_p
from .partitions import NonCrossingPairPartition, PairPartition, enumerate_nc2, enumerate_p2


@dataclass(frozen=True)
class MomentQuery:
    """A monomial word: (polynomial degree, time) per factor, trace implied."""

    word: tuple  # tuple of (degree, time)

    def __post_init__(self):
        for d, _t in self.word:
            if d < 0:
                raise ValueError("degrees must be >= 0")

    @property
    def letters(self) -> tuple:
        """One time tag per matrix factor after expanding the powers."""
        return tuple(t for d, t in self.word for _ in range(d))


def kappa_weight(pi: NonCrossingPairPartition, j: int, k: int, t1: float, t2: float) -> float:
    """Product over blocks: 1 if both endpoints lie on the same side of the
    j|k split of {1..j+k}, e^{-|t1-t2|} if the block straddles it."""
    if pi.ground_set != frozenset(range(1, j + k + 1)):
        raise ValueError(f"partition is not over {{1..{j + k}}}")
    q = math.exp(-abs(t1 - t2))
    w = 1.0
    for a, b in pi.pairs:
        if (a <= j) != (b <= j):
            w *= q
    return w


def _straddle_counts(letter_tags: tuple) -> list:
    """Histogram over NC2 pairings of the number of blocks joining tag 0 to tag 1.

    letter_tags[i] in {0, 1} marks which of the two times letter i carries.
    Returns counts c where c[s] = #{pi : s straddling blocks}, so the mixed
    moment is sum_s c[s] q^s with q the two-time kernel value.
    """
    ell = len(letter_tags)
    counts = [0] * (ell // 2 + 1)
    for pi in enumerate_nc2(ell):
        s = sum(1 for a, b in pi.pairs if letter_tags[a - 1] != letter_tags[b - 1])
        counts[s] += 1
    return counts


def semicircular_mixed_moment(query: MomentQuery) -> float:
    """Leading-order normalized trace moment of the stationary semicircular flow.

    Equals the sum over non-crossing pairings of the letters of the product
    of e^{-|t-t'|} over paired letters; zero when the total degree is odd.
    """
    letters = query.letters
    if len(letters) % 2:
        return 0.0
    total = 0.0
    for pi in enumerate_nc2(len(letters)):
        w = 1.0
        for a, b in pi.pairs:
            w *= math.exp(-abs(letters[a - 1] - letters[b - 1]))
        total += w
    return total


@lru_cache(maxsize=None)
def semicircular_cov_p_poly(j: int, k: int) -> tuple:
    """Integer coefficients (in q = e^{-|t1-t2|}) of the limiting covariance
    (1/n) E Tr P_j(at t1) P_k(at t2).

    Expands both polynomials into monomials and Wick-sums each monomial pair
    exactly.  The result collapses to delta_jk q^k; returning the full
    coefficient vector lets tests check that cancellation rather than assume
    it.
    """
    if j < 0 or k < 0:
        raise ValueError("degrees must be >= 0")
    cj = poly_p(j).coeffs
    ck = poly_p(k).coeffs
    out = [0] * (max(j, k) + 1)
    for r, cr in enumerate(cj):
        if cr == 0:
            continue
        for s, cs in enumerate(ck):
            if cs == 0 or (r + s) % 2:
                continue
            tags = (0,) * r + (1,) * s
            for power, count in enumerate(_straddle_counts(tags)):
                if count:
                    out[power] += cr * cs * count
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def semicircular_cov_p(j: int, k: int, t1: float, t2: float) -> float:
    q = math.exp(-abs(t1 - t2))
    acc = 0.0
    for power, c in enumerate(semicircular_cov_p_poly(j, k)):
        acc += c * q**power
    return acc


def _wick_moment(terms, kernel) -> float:
    """Gaussian joint moment: sum over pairings of products of pair kernels."""
    m = len(terms)
    if m % 2:
        return 0.0
    if m == 0:
        return 1.0
    total = 0.0
    for pi in enumerate_p2(range(m)):
        w = 1.0
        for a, b in pi.pairs:
            w *= kernel(terms[a], terms[b])
            if w == 0.0:
                break
        total += w
    return total


def _limit_kernel_a(x, y) -> float:
    (j1, t1), (j2, t2) = x, y
    if j1 != j2:
        return 0.0
    return 2.0 * math.exp(-(2 * j1 - 1) * abs(t1 - t2))


def _limit_kernel_b(x, y) -> float:
    (j1, t1), (j2, t2) = x, y
    if j1 != j2:
        return 0.0
    return 2.0 * math.exp(-2 * j1 * abs(t1 - t2))


def limiting_joint_moment(a_terms, b_terms) -> float:
    """Joint moment E[prod A_{j}(t) prod B_{j'}(t')] of the limit family.

    A_j and B_j are the centered Gaussian limits of the scaled diagonal and
    off-diagonal entry processes, mutually independent across the two
    families and across indices, with covariances 2 e^{-(2j-1)|t-s|} and
    2 e^{-2j|t-s|}.  The moment factorizes accordingly; odd counts vanish.
    """
    a_terms = [(int(j), float(t)) for j, t in a_terms]
    b_terms = [(int(j), float(t)) for j, t in b_terms]
    for j, _t in a_terms + b_terms:
        if j < 1:
            raise ValueError("entry indices start at 1")
    return _wick_moment(a_terms, _limit_kernel_a) * _wick_moment(b_terms, _limit_kernel_b)
