from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from featherline.intervals import (CofiniteSet, FinSet, IntervalSet,
                                   cofinite_meet, iset_complement_is_finite,
                                   iset_covers_line, iset_meet,
                                   iset_remove_point, iset_union,
                                   pick_rational_in)
from featherline.rationals import NEG_INF, POS_INF

rationals = st.fractions(min_value=-20, max_value=20)


def iset_from_pairs(pairs):
    return IntervalSet.of(*[(a, b) for a, b in pairs if a < b])


interval_sets = st.lists(
    st.tuples(rationals, rationals).map(lambda p: (min(p), max(p))),
    max_size=4).map(iset_from_pairs)


def test_touching_open_intervals_stay_distinct():
    # (0,1) and (1,2) are not a connected union: 1 is missing
    s = IntervalSet.of((0, 1), (1, 2))
    assert len(s.intervals) == 2
    assert not s.contains(Fraction(1))


def test_overlapping_intervals_merge():
    s = IntervalSet.of((0, 2), (1, 3))
    assert s.intervals == ((Fraction(0), Fraction(3)),)


def test_meet_example():
    a = IntervalSet.of((-1, 1))
    b = IntervalSet.of((0, 2))
    assert iset_meet(a, b) == IntervalSet.of((0, 1))


@given(interval_sets, interval_sets, rationals)
def test_meet_union_pointwise(a, b, x):
    assert iset_meet(a, b).contains(x) == (a.contains(x) and b.contains(x))
    assert iset_union(a, b).contains(x) == (a.contains(x) or b.contains(x))


@given(interval_sets, rationals, rationals)
def test_remove_point_membership(a, x, y):
    r = iset_remove_point(a, x)
    assert not r.contains(x)
    if y != x:
        assert r.contains(y) == a.contains(y)


def test_complement_finite():
    assert iset_complement_is_finite(IntervalSet.full_line())
    punched = iset_remove_point(IntervalSet.full_line(), Fraction(0))
    assert iset_complement_is_finite(punched)
    assert not iset_complement_is_finite(IntervalSet.of((0, POS_INF)))
    assert not iset_complement_is_finite(IntervalSet.of((0, 1)))


def test_covers_line():
    assert iset_covers_line(IntervalSet.full_line())
    assert not iset_covers_line(iset_remove_point(IntervalSet.full_line(), Fraction(0)))
    assert not iset_covers_line(IntervalSet.of((NEG_INF, 0), (0, POS_INF)))


@given(rationals, rationals, st.sets(rationals, max_size=3))
def test_pick_rational_in(lo, hi, avoid):
    if lo >= hi:
        return
    r = pick_rational_in(lo, hi, avoid)
    assert lo < r < hi and r not in avoid


def test_pick_is_deterministic():
    assert pick_rational_in(Fraction(0), Fraction(1)) == pick_rational_in(
        Fraction(0), Fraction(1))


def test_finset():
    s = FinSet.of(Fraction(1), Fraction(0), Fraction(1))
    assert list(s) == [Fraction(0), Fraction(1)]
    assert Fraction(1) in s and Fraction(2) not in s


def test_cofinite_sets():
    d = CofiniteSet.excl(1, 2)
    assert d.contains(0) and not d.contains(1)
    assert cofinite_meet(CofiniteSet.excl(1), CofiniteSet.excl(2)).excluded == (1, 2)
    assert cofinite_meet(CofiniteSet.ground(), CofiniteSet.empty()).empty_set
    assert not CofiniteSet.empty().contains(5)


@given(st.lists(st.integers(0, 9), max_size=3), st.lists(st.integers(0, 9), max_size=3),
       st.integers(0, 12))
def test_cofinite_meet_pointwise(e1, e2, n):
    a, b = CofiniteSet.excl(*e1), CofiniteSet.excl(*e2)
    assert cofinite_meet(a, b).contains(n) == (a.contains(n) and b.contains(n))
