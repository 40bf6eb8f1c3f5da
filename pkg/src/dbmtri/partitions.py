"""Pair partitions, non-crossing pair partitions, and the pairing-to-permutation map.

Ground sets are any sets of comparable, hashable labels; the crossing notion
applies to integer ground sets {1, ..., n}.  Enumeration is exact and capped
(factorial growth): P2 refuses ground sets larger than 12 and NC2 refuses
n > 16 rather than approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

P2_MAX = 12
NC2_MAX = 16


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def double_factorial_odd(m: int) -> int:
    """(m-1)!! for even m: the number of pairings of m points."""
    out = 1
    for v in range(m - 1, 0, -2):
        out *= v
    return out


@dataclass(frozen=True)
class PairPartition:
    """Disjoint 2-blocks covering the ground set; pairs stored sorted."""

    pairs: tuple  # tuple of (a, b) with a < b, sorted by a

    def __post_init__(self):
        seen = set()
        for a, b in self.pairs:
            if not a < b:
                raise ValueError(f"pair {(a, b)} not in increasing order")
            if a in seen or b in seen:
                raise ValueError("blocks are not disjoint")
            seen.update((a, b))
        if self.pairs != tuple(sorted(self.pairs)):
            raise ValueError("pairs not sorted")

    @classmethod
    def from_blocks(cls, blocks):
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    @property
    def ground_set(self) -> frozenset:
        return frozenset(x for p in self.pairs for x in p)

    def partner(self, x):
        for a, b in self.pairs:
            if x == a:
                return b
            if x == b:
                return a
        raise KeyError(x)


def is_noncrossing(pairs) -> bool:
    """No a < c < b < d with {a,b} and {c,d} distinct blocks."""
    return not _has_crossing([tuple(sorted(p)) for p in pairs])


def _has_crossing(ps) -> bool:
    for i, (a, b) in enumerate(ps):
        for c, d in ps[i + 1 :]:
            lo, hi = min((a, b), (c, d)), max((a, b), (c, d))
            if lo[0] < hi[0] < lo[1] < hi[1]:
                return True
    return False


@dataclass(frozen=True)
class NonCrossingPairPartition(PairPartition):
    def __post_init__(self):
        super().__post_init__()
        if _has_crossing(self.pairs):
            raise ValueError("partition has a crossing")


def enumerate_p2(ground) -> list:
    """All pairings of the ground set; empty list when its size is odd."""
    items = sorted(ground)
    if len(items) > P2_MAX:
        raise ValueError(f"ground set of size {len(items)} exceeds the enumeration cap {P2_MAX}")
    if len(items) % 2:
        return []
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(PairPartition.from_blocks(acc))
            return
        first = rest[0]
        for i in range(1, len(rest)):
            rec(rest[1:i] + rest[i + 1 :], acc + [(first, rest[i])])

    rec(items, [])
    return out


def enumerate_nc2(n: int) -> list:
    """All non-crossing pairings of {1, ..., n}; empty when n is odd.

    Generated by the interval recursion (1 pairs with some even-offset j,
    splitting the rest into an inside and an outside block), so nothing is
    filtered: |result| = Catalan(n/2) by construction.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > NC2_MAX:
        raise ValueError(f"n={n} exceeds the enumeration cap {NC2_MAX}")
    if n % 2:
        return []

    def rec(points):
        if not points:
            return [[]]
        first = points[0]
        out = []
        for i in range(1, len(points), 2):
            inside = rec(points[1:i])
            outside = rec(points[i + 1 :])
            for pi_in in inside:
                for pi_out in outside:
                    out.append([(first, points[i])] + pi_in + pi_out)
        return out

    return [NonCrossingPairPartition.from_blocks(p) for p in rec(list(range(1, n + 1)))]


@dataclass(frozen=True)
class PermutationCycles:
    """Disjoint cycles covering an index set, in canonical form.

    Each cycle is rotated so its smallest element comes first; cycles are
    sorted by that element.
    """

    cycles: tuple  # tuple of tuples

    def __post_init__(self):
        seen = set()
        for c in self.cycles:
            if not c:
                raise ValueError("empty cycle")
            if min(c) != c[0]:
                raise ValueError("cycle not rotated to canonical form")
            for x in c:
                if x in seen:
                    raise ValueError("cycles are not disjoint")
                seen.add(x)
        if list(self.cycles) != sorted(self.cycles, key=lambda c: c[0]):
            raise ValueError("cycles not sorted")

    @classmethod
    def from_cycles(cls, cycles):
        canon = []
        for c in cycles:
            c = tuple(c)
            k = c.index(min(c))
            canon.append(c[k:] + c[:k])
        return cls(tuple(sorted(canon, key=lambda c: c[0])))

    def __str__(self):
        moved = [c for c in self.cycles if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in moved)

    @property
    def support(self) -> frozenset:
        return frozenset(x for c in self.cycles for x in c)

    def apply(self, x):
        for c in self.cycles:
            if x in c:
                return c[(c.index(x) + 1) % len(c)]
        raise KeyError(x)


def perm_from_pairing(pi: PairPartition, index_set) -> PermutationCycles:
    """Map a pairing of the doubled set {1,2} x J to a permutation of J.

    Walk rule: from a point p, jump to the partner pi(p), then flip the row
    coordinate ((1,j) <-> (2,j)); the j's visited before returning to the
    start form one cycle.  New cycles start at (1, j) for the smallest
    unvisited j.
    """
    js = sorted(index_set)
    doubled = {(r, j) for r in (1, 2) for j in js}
    if pi.ground_set != frozenset(doubled):
        raise ValueError("pairing is not over {1,2} x J for the given index set")
    partner = {}
    for a, b in pi.pairs:
        partner[a] = b
        partner[b] = a

    unvisited = set(js)
    cycles = []
    while unvisited:
        j0 = min(unvisited)
        unvisited.discard(j0)
        start = (1, j0)
        cycle = [j0]
        p = start
        while True:
            q = partner[p]
            nxt = (3 - q[0], q[1])
            if nxt == start:
                break
            if nxt[1] not in unvisited:
                raise ValueError("walk revisited an index; pairing is malformed")
            unvisited.discard(nxt[1])
            cycle.append(nxt[1])
            p = nxt
        cycles.append(cycle)
    return PermutationCycles.from_cycles(cycles)


def perm_multiplicity(sigma: PermutationCycles) -> int:
    """Number of pairings mapping to sigma: 2^(sum over cycles of length-1)."""
    return 2 ** sum(len(c) - 1 for c in sigma.cycles)
