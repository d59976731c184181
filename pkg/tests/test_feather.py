from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from featherline import feather as fe
from featherline.rationals import PreconditionError

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10)


@st.composite
def feather_points(draw, max_len=4):
    n = draw(st.integers(1, max_len))
    coords = sorted(draw(st.lists(rationals, min_size=n, max_size=n, unique=True)))
    p = tuple(coords)
    if draw(st.booleans()):
        p = p + (p[-1],)
    return p


@st.composite
def flip_pivots(draw):
    p = draw(feather_points())
    if len(p) < 2:
        p = p + (p[-1] + 1,)
    return p


# ---------------------------------------------------------------------------
# Points and order.


def test_validate():
    assert fe.fp_validate((F(0), F(1), F(1))) == (F(0), F(1), F(1))
    assert fe.fp_validate((F(5),)) == (F(5),)
    with pytest.raises(PreconditionError):
        fe.fp_validate((F(0), F(0), F(0)))
    with pytest.raises(PreconditionError):
        fe.fp_validate(())


def test_order_examples():
    assert fe.fp_less((F(0),), (F(1, 2),))
    assert not fe.fp_less((F(0),), (F(0), F(1)))
    assert not fe.fp_less((F(0), F(1)), (F(0),))
    assert fe.fp_less((F(0), F(0)), (F(0), F(1)))


@given(feather_points())
def test_order_irreflexive(p):
    assert not fe.fp_less(p, p)


@given(feather_points(), feather_points(), feather_points())
def test_order_transitive(p, q, r):
    if fe.fp_less(p, q) and fe.fp_less(q, r):
        assert fe.fp_less(p, r)


def test_twin_examples():
    assert fe.fp_twin((F(0),)) == (F(0), F(0))
    assert fe.fp_twin((F(0), F(1), F(1))) == (F(0), F(1))
    assert fe.fp_twin((F(0), F(1))) == (F(0), F(1), F(1))


@given(feather_points())
def test_twin_involution_and_incomparability(p):
    q = fe.fp_twin(p)
    assert fe.fp_twin(q) == p
    assert not fe.fp_less(p, q) and not fe.fp_less(q, p)


@given(feather_points(), feather_points())
def test_twins_share_strict_predecessors(p, r):
    q = fe.fp_twin(p)
    if r not in (p, q):
        assert fe.fp_less(r, p) == fe.fp_less(r, q)


# ---------------------------------------------------------------------------
# Intervals, arms and meets.


def test_interval_membership():
    i = fe.FeatherInterval((F(0), F(0)), (F(0), F(1)))
    assert i.contains((F(0), F(1, 2)))
    assert not i.contains((F(0),))
    assert not i.contains((F(0), F(1)))


def test_meet_example_line_level():
    i1 = fe.FeatherInterval((F(-1),), (F(1),))
    i2 = fe.FeatherInterval((F(0),), (F(2),))
    [m] = fe.fi_meet(i1, i2)
    assert m.lower == (F(0),) and m.upper == (F(1),)


def test_interval_endpoint_validation():
    # (0) and (0,5,7) are incomparable, so they bound no interval
    with pytest.raises(PreconditionError):
        fe.FeatherInterval((F(0),), (F(0), F(5), F(7)))
    i1 = fe.FeatherInterval((F(-1),), (F(0), F(5), F(7)))
    assert i1.contains((F(0), F(3)))
    i2 = fe.FeatherInterval((F(0), F(1)), (F(0), F(2)))
    assert not fe.fi_meet(i2, fe.FeatherInterval((F(5),), (F(6),)))


@given(feather_points(), feather_points(), feather_points())
def test_interval_membership_is_order(u, v, w):
    if not fe.fp_less(u, v):
        return
    i = fe.FeatherInterval(u, v)
    assert i.contains(w) == (fe.fp_less(u, w) and fe.fp_less(v, w) is False
                             and fe.fp_less(w, v))


@given(feather_points(), feather_points(), feather_points(), feather_points(),
       feather_points())
def test_meet_pointwise(u1, v1, u2, v2, w):
    if not (fe.fp_less(u1, v1) and fe.fp_less(u2, v2)):
        return
    i1, i2 = fe.FeatherInterval(u1, v1), fe.FeatherInterval(u2, v2)
    parts = fe.fi_meet(i1, i2)
    member = any(m.contains(w) for m in parts)
    assert member == (i1.contains(w) and i2.contains(w))


# ---------------------------------------------------------------------------
# Charts.


def test_pure_chart():
    c = fe.fp_chart((F(0), F(1)), F(1, 2))
    assert c.contains((F(0), F(5, 4)))
    assert not c.contains((F(0), F(1), F(5, 4)))
    assert c.to_coord((F(0), F(5, 4))) == F(1, 4)
    assert c.from_coord(F(1, 4)) == (F(0), F(5, 4))


def test_glued_chart():
    c = fe.fp_chart((F(0), F(0)), F(1, 2))
    assert c.contains((F(-1, 4),))        # below the branch point
    assert c.contains((F(0), F(1, 4)))    # above, on the upper branch
    assert c.contains((F(0), F(0)))
    assert not c.contains((F(0),))        # the lower twin is outside
    assert c.from_coord(F(-1, 4)) == (F(-1, 4),)
    assert c.from_coord(F(1, 4)) == (F(0), F(1, 4))


def test_chart_auto_shrink():
    # eps must not reach past the previous coordinate
    c = fe.fp_chart((F(0), F(1)), F(5))
    assert not c.contains((F(0), F(0)))
    assert c.radius <= 1


@given(feather_points(), st.fractions(min_value="1/8", max_value=2))
def test_chart_coord_roundtrip(p, eps):
    c = fe.fp_chart(p, eps)
    assert c.to_coord(p) == 0
    probe = c.from_coord(c.radius / 2)
    assert c.contains(probe)
    assert c.to_coord(probe) == c.radius / 2


# ---------------------------------------------------------------------------
# Flips and homogeneity.


def test_flip_case_display():
    s = (F(0), F(1))
    assert fe.flip_apply(s, (F(0), F(5))) == (F(5),)
    assert fe.flip_apply(s, (F(5), F(7))) == (F(0), F(5), F(7))
    assert fe.flip_apply(s, (F(-3),)) == (F(-3),)
    assert fe.flip_apply(s, (F(0), F(0))) == (F(0),)
    assert fe.flip_apply(s, (F(0),)) == (F(0), F(0))


def test_flip_case_precedence():
    # r matching both cases resolves through the prefix case
    assert fe.flip_apply((F(0), F(1), F(1)), (F(0), F(1), F(1))) == (F(0), F(1))


@given(flip_pivots(), feather_points())
def test_flip_involution(s, r):
    out = fe.flip_apply(s, r)
    fe.fp_validate(out)
    assert fe.flip_apply(s, out) == r


def test_normalize_examples():
    word, out = fe.normalize_to_line((F(0), F(1), F(3)))
    assert out == (F(3),)
    assert [g.pivot for g in word] == [(F(0), F(1), F(3)), (F(0), F(1))]
    word, out = fe.normalize_to_line((F(7),))
    assert word == () and out == (F(7),)


@given(feather_points(), feather_points())
def test_move_exact(p, q):
    word = fe.fp_move(p, q)
    assert fe.replay(word, p) == q


@given(feather_points())
def test_twin_swap_flip(p):
    gen = fe.twin_swap_flip(p)
    assert gen.apply(p) == fe.fp_twin(p)
    assert gen.apply(fe.fp_twin(p)) == p


# ---------------------------------------------------------------------------
# The contraction homotopy.


def test_homotopy_examples():
    assert fe.homotopy_eval(F(1), (F(0), F(2))) == (F(0), F(0))
    assert fe.homotopy_eval(F(3, 4), (F(0), F(1), F(3))) == (F(0), F(1, 2))
    assert fe.homotopy_eval(F(1, 2), (F(0), F(1), F(3))) == (F(0), F(1), F(1))
    assert fe.homotopy_eval(F(2), (F(0), F(1), F(3))) == (F(-1),)


@given(feather_points())
def test_homotopy_endpoints(s):
    assert fe.homotopy_eval(F(0), s) == s
    h1 = fe.homotopy_eval(F(1), s)
    if len(s) > 1:
        assert h1 == (s[0], s[0])
    else:
        assert h1 == s
    assert len(fe.homotopy_eval(F(2), s)) == 1


def test_homotopy_domain():
    with pytest.raises(PreconditionError):
        fe.homotopy_eval(F(-1, 2), (F(0),))
    with pytest.raises(PreconditionError):
        fe.homotopy_eval(F(5, 2), (F(0),))


@given(feather_points(max_len=3))
def test_seam_limits_equal_or_twins(s):
    n = len(s) - 1
    seams = [F(1)] + [F(1, m) for m in range(2, n + 1)]
    for t0 in seams:
        left, right = fe.homotopy_seam_limits(t0, s)
        assert left == right or fe.fp_twin(left) == right


# ---------------------------------------------------------------------------
# Skeleton and branch families.


def test_strict_skeleton():
    a = fe.strict_skeleton()
    assert a.contains((F(0), F(1)))
    assert not a.contains((F(0), F(0)))
    pair = a.adjoin_witness((F(0), F(0)))
    assert pair == ((F(0), F(0)), (F(0),))


def test_skeleton_through_upper_twin():
    h = fe.skeleton_through((F(0), F(0)))
    assert h.contains((F(0), F(0)))
    assert not h.contains((F(0),))


def test_disjoint_branch_family():
    i0 = fe.disjoint_branch_family(F(0), F(1), F(2))
    i1 = fe.disjoint_branch_family(F(1), F(2), F(3))
    assert i0.contains((F(0), F(3, 2)))
    assert not fe.fi_meet(i0, i1)
    with pytest.raises(PreconditionError):
        fe.disjoint_branch_family(F(0), F(1), F(1))
