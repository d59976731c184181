"""Symbolic set algebra on the line: open interval unions, finite sets,
cofinite subsets of the naturals.

All sets are finite presentations with rational or infinite endpoints, so
every operation here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import NEG_INF, POS_INF, PreconditionError, as_ext, fmt_ext


@dataclass(frozen=True)
class IntervalSet:
    """Canonical finite union of open intervals (a, b), sorted and
    non-overlapping.  Touching intervals like (0,1) and (1,2) stay distinct
    because the shared endpoint is absent from both."""

    intervals: tuple  # tuple of (lo, hi) pairs

    @staticmethod
    def of(*pairs) -> "IntervalSet":
        return canon_intervals([(as_ext(a), as_ext(b)) for a, b in pairs])

    @staticmethod
    def empty() -> "IntervalSet":
        return IntervalSet(())

    @staticmethod
    def full_line() -> "IntervalSet":
        return IntervalSet(((NEG_INF, POS_INF),))

    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, x) -> bool:
        for lo, hi in self.intervals:
            if lo < x < hi:
                return True
        return False

    def __str__(self):
        if not self.intervals:
            return "empty"
        return "u".join("(%s,%s)" % (fmt_ext(a), fmt_ext(b)) for a, b in self.intervals)


def canon_intervals(pairs) -> IntervalSet:
    """Sort, drop empty intervals, merge genuinely overlapping ones."""
    pairs = sorted((p for p in pairs if p[0] < p[1]))
    merged = []
    for lo, hi in pairs:
        if merged and lo < merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return IntervalSet(tuple((lo, hi) for lo, hi in merged))


def iset_meet(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Intersection by a two-pointer sweep over the sorted presentations."""
    out = []
    i = j = 0
    ai, bi = a.intervals, b.intervals
    while i < len(ai) and j < len(bi):
        lo = max(ai[i][0], bi[j][0])
        hi = min(ai[i][1], bi[j][1])
        if lo < hi:
            out.append((lo, hi))
        if ai[i][1] <= bi[j][1]:
            i += 1
        else:
            j += 1
    return IntervalSet(tuple(out))


def iset_union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return canon_intervals(list(a.intervals) + list(b.intervals))


def iset_contains(a: IntervalSet, x) -> bool:
    return a.contains(x)


def iset_remove_point(a: IntervalSet, x) -> IntervalSet:
    """Punch a single point out of the set (splits its interval)."""
    out = []
    for lo, hi in a.intervals:
        if lo < x < hi:
            out.append((lo, x))
            out.append((x, hi))
        else:
            out.append((lo, hi))
    return IntervalSet(tuple(out))


def iset_complement_is_finite(a: IntervalSet) -> bool:
    """True iff the complement of the union is a finite set of points,
    i.e. the intervals stretch to both infinities with zero-width gaps."""
    iv = a.intervals
    if not iv:
        return False
    if iv[0][0] != NEG_INF or iv[-1][1] != POS_INF:
        return False
    for k in range(len(iv) - 1):
        if iv[k][1] != iv[k + 1][0]:
            return False
    return True


def iset_dense_in_line(a: IntervalSet, holes: "FinSet") -> bool:
    """True iff a-minus-holes meets every nonempty open interval.  Removing
    finitely many points cannot destroy that, so the verdict depends only on
    the complement of `a` being finite."""
    del holes
    return iset_complement_is_finite(a)


def iset_covers_line(a: IntervalSet) -> bool:
    return a.intervals == ((NEG_INF, POS_INF),)


def pick_rational_in(lo, hi, avoid=()) -> Fraction:
    """Deterministically pick a rational strictly inside (lo, hi) and outside
    the finite collection `avoid`."""
    if lo >= hi:
        raise PreconditionError("empty interval (%s,%s)" % (fmt_ext(lo), fmt_ext(hi)))
    avoid = set(avoid)
    if lo == NEG_INF and hi == POS_INF:
        candidates = (Fraction(n) for n in _naturals_signed())
    elif lo == NEG_INF:
        candidates = (hi - Fraction(1, 2**j) for j in range(len(avoid) + 2))
    elif hi == POS_INF:
        candidates = (lo + Fraction(1, 2**j) for j in range(len(avoid) + 2))
    else:
        candidates = (lo + (hi - lo) / 2**j for j in range(1, len(avoid) + 3))
    for c in candidates:
        if c not in avoid and lo < c < hi:
            return c
    raise AssertionError("unreachable: ran out of candidates")


def _naturals_signed():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def iset_pick_point(a: IntervalSet, avoid=()) -> Fraction:
    avoid = set(avoid)
    for lo, hi in a.intervals:
        try:
            return pick_rational_in(lo, hi, avoid)
        except AssertionError:  # pragma: no cover - interval crowded by avoid
            continue
    raise PreconditionError("empty set has no points")


@dataclass(frozen=True)
class FinSet:
    """Finite sorted duplicate-free set of finite rationals."""

    elements: tuple

    @staticmethod
    def of(*xs) -> "FinSet":
        return FinSet(tuple(sorted({Fraction(x) for x in xs})))

    @staticmethod
    def empty() -> "FinSet":
        return FinSet(())

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def union(self, other: "FinSet") -> "FinSet":
        return FinSet(tuple(sorted(set(self.elements) | set(other.elements))))

    def __str__(self):
        return "{%s}" % ",".join(fmt_ext(x) for x in self.elements)


@dataclass(frozen=True)
class CofiniteSet:
    """Subset of the naturals that is either empty or has finite complement.
    A non-empty member denotes N minus `excluded`."""

    excluded: tuple  # sorted tuple of ints; ignored when empty_set is True
    empty_set: bool = False

    @staticmethod
    def excl(*ns) -> "CofiniteSet":
        return CofiniteSet(tuple(sorted(set(int(n) for n in ns))))

    @staticmethod
    def empty() -> "CofiniteSet":
        return CofiniteSet((), empty_set=True)

    @staticmethod
    def ground() -> "CofiniteSet":
        return CofiniteSet(())

    def contains(self, n: int) -> bool:
        if self.empty_set:
            return False
        return n >= 0 and n not in self.excluded

    def __str__(self):
        if self.empty_set:
            return "cofinite-empty"
        return "cofinite-excl{%s}" % ",".join(str(n) for n in self.excluded)


def cofinite_meet(a: CofiniteSet, b: CofiniteSet) -> CofiniteSet:
    """Intersection: union of excluded sets; the empty set absorbs."""
    if a.empty_set or b.empty_set:
        return CofiniteSet.empty()
    return CofiniteSet(tuple(sorted(set(a.excluded) | set(b.excluded))))
