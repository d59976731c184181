"""The complete feather: an everywhere-branching line.

Points are finite rational sequences (s_0, ..., s_n) with
s_0 < s_1 < ... < s_{n-1} <= s_n (only the last step may be slack).  The
space carries the order topology of the tree order

    (s_0..s_n) < (t_0..t_m)  iff  n <= m, s_i = t_i for i < n, s_n < t_n.

Basic opens are order intervals {w : u < w < v}.  Internally every interval
is decomposed into "arms": sets of the form {prefix + (r,) : r in range},
which make meets, twin detection and chart reasoning finite case analyses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rationals import PreconditionError

# A feather point is a plain tuple of Fractions, validated by fp_validate.


def fp_validate(seq) -> tuple:
    """Check the increasing-then-slack constraint and return the point."""
    seq = tuple(Fraction(x) for x in seq)
    if not seq:
        raise PreconditionError("feather point must be nonempty")
    for i in range(len(seq) - 2):
        if not seq[i] < seq[i + 1]:
            raise PreconditionError("coordinates must be strictly increasing before the last step: %s" % (seq,))
    if len(seq) >= 2 and not seq[-2] <= seq[-1]:
        raise PreconditionError("last step must be non-decreasing: %s" % (seq,))
    return seq


def fp_is_valid(seq) -> bool:
    try:
        fp_validate(seq)
        return True
    except PreconditionError:
        return False


def fp_less(p: tuple, q: tuple) -> bool:
    n = len(p) - 1
    if n > len(q) - 1:
        return False
    return p[:n] == q[:n] and p[n] < q[n]


def fp_is_strict(p: tuple) -> bool:
    """True for points whose last step is strict (they are lower twins)."""
    return len(p) == 1 or p[-2] < p[-1]


def fp_twin(p: tuple) -> tuple:
    """The unique partner with the same predecessors: append the last
    coordinate if the last step is strict, drop it otherwise."""
    if fp_is_strict(p):
        return p + (p[-1],)
    return p[:-1]


def fp_translate(t, p: tuple) -> tuple:
    t = Fraction(t)
    return tuple(x + t for x in p)


# ---------------------------------------------------------------------------
# Order intervals and their arm decomposition.


@dataclass(frozen=True)
class Arm:
    """{prefix + (r,) : r in (lo, hi)}, with the lower end closed when
    lo equals prefix[-1] (the branch point sits on the arm)."""

    prefix: tuple
    lo: Fraction
    hi: Fraction
    lo_closed: bool = False

    def contains_coord(self, r) -> bool:
        if self.lo_closed:
            return self.lo <= r < self.hi
        return self.lo < r < self.hi

    def contains(self, p: tuple) -> bool:
        return p[:-1] == self.prefix and self.contains_coord(p[-1])

    def is_empty(self) -> bool:
        return not self.lo < self.hi


@dataclass(frozen=True)
class FeatherInterval:
    """Basic open {w : lower < w < upper}."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        fp_validate(self.lower)
        fp_validate(self.upper)
        if not fp_less(self.lower, self.upper):
            raise PreconditionError(
                "interval endpoints must satisfy lower < upper: %s, %s" % (self.lower, self.upper))

    def contains(self, p: tuple) -> bool:
        return fp_less(self.lower, p) and fp_less(p, self.upper)

    def arms(self) -> tuple:
        return interval_arms(self.lower, self.upper)


def interval_arms(u: tuple, v: tuple) -> tuple:
    """Decompose {w : u < w < v} into arms, one per admissible length.

    Members are exactly the points (v_0..v_{m-1}, r) with r < v_m that also
    dominate u; domination forces either m = n (same length as u, range
    bounded below by u_n) or m > n with u_n < v_n.
    """
    n = len(u) - 1
    arms = []
    for m in range(n, len(v)):
        prefix = v[:m]
        if m == n:
            if u[:n] != v[:n]:
                continue
            arm = Arm(prefix, u[n], v[n], lo_closed=False)
        else:
            if u[:n] != v[:n] or not u[n] < v[n]:
                break
            arm = Arm(prefix, v[m - 1], v[m], lo_closed=True)
        if not arm.is_empty():
            arms.append(arm)
    return tuple(arms)


def normalize_arms(arms) -> tuple:
    """Sort and merge same-prefix arms with overlapping or closed-touching
    coordinate ranges."""
    keyed = sorted((a for a in arms if not a.is_empty()),
                   key=lambda a: (len(a.prefix), a.prefix, a.lo, not a.lo_closed))
    out = []
    for arm in keyed:
        if out and out[-1].prefix == arm.prefix:
            prev = out[-1]
            if arm.lo < prev.hi or (arm.lo == prev.hi and arm.lo_closed) or (
                    arm.lo == prev.lo):
                out[-1] = Arm(prev.prefix, prev.lo, max(prev.hi, arm.hi), prev.lo_closed)
                continue
        out.append(arm)
    return tuple(out)


def meet_arms(arms1, arms2) -> tuple:
    out = []
    for a in arms1:
        for b in arms2:
            if a.prefix != b.prefix:
                continue
            if a.lo > b.lo:
                lo, closed = a.lo, a.lo_closed
            elif b.lo > a.lo:
                lo, closed = b.lo, b.lo_closed
            else:
                lo, closed = a.lo, a.lo_closed and b.lo_closed
            hi = min(a.hi, b.hi)
            arm = Arm(a.prefix, lo, hi, closed)
            if not arm.is_empty():
                out.append(arm)
    return normalize_arms(out)


def arms_to_intervals(arms) -> list:
    """Reassemble a normalized arm union into order intervals.  Closed arms
    are glued below onto the arm ending at their branch point; a stranded
    closed arm would denote a non-open set and is rejected."""
    arms = list(normalize_arms(arms))
    open_arms = [a for a in arms if not a.lo_closed]
    closed_arms = [a for a in arms if a.lo_closed]
    chains = [[a] for a in open_arms]
    progress = True
    while closed_arms and progress:
        progress = False
        for chain in chains:
            tail = chain[-1]
            for c in closed_arms:
                if c.prefix == tail.prefix + (tail.hi,) and c.lo == tail.hi:
                    chain.append(c)
                    closed_arms.remove(c)
                    progress = True
                    break
    if closed_arms:
        raise AssertionError("stranded closed arm (non-open arm union): %s" % closed_arms)
    out = []
    for chain in chains:
        head, tail = chain[0], chain[-1]
        out.append(FeatherInterval(head.prefix + (head.lo,), tail.prefix + (tail.hi,)))
    return out


def fi_meet(i1: FeatherInterval, i2: FeatherInterval) -> list:
    """Meet of two order intervals: a finite union of order intervals."""
    return arms_to_intervals(meet_arms(i1.arms(), i2.arms()))


def arms_twin_pair(arms):
    """Search an arm union for a twin pair {(q,r), (q,r,r)}.  Returns the
    pair or None.  The longer twin can only sit at the closed lower end of
    an arm one level above the shorter one."""
    arms = normalize_arms(arms)
    for a2 in arms:
        if not a2.lo_closed:
            continue
        r = a2.lo
        if a2.prefix and a2.prefix[-1] != r:
            continue
        q = a2.prefix[:-1]
        for a1 in arms:
            if a1.prefix == q and a1.contains_coord(r):
                return (q + (r,), q + (r, r))
    return None


# ---------------------------------------------------------------------------
# Charts.


@dataclass(frozen=True)
class Chart:
    """Canonical basic neighborhood of a point, homeomorphic to (-eps, eps)
    via r |-> r - (last coordinate of the center)."""

    center: tuple
    radius: Fraction
    interval: FeatherInterval

    def arms(self):
        return self.interval.arms()

    def contains(self, p: tuple) -> bool:
        return self.interval.contains(p)

    def to_coord(self, p: tuple) -> Fraction:
        if not self.contains(p):
            raise PreconditionError("point outside chart")
        return p[-1] - self.center[-1]

    def from_coord(self, c) -> tuple:
        c = Fraction(c)
        if not -self.radius < c < self.radius:
            raise PreconditionError("coordinate outside chart range")
        a = self.center[-1]
        if fp_is_strict(self.center):
            return self.center[:-1] + (a + c,)
        if c < 0:
            return self.center[:-2] + (a + c,)
        return self.center[:-1] + (a + c,)


def fp_chart(p: tuple, eps) -> Chart:
    """Chart at p of radius at most eps, auto-shrunk so the member set keeps
    one of the two canonical shapes (pure arm, or glued twin neighborhood)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("chart radius must be positive")
    p = fp_validate(p)
    if fp_is_strict(p):
        if len(p) >= 2:
            eps = min(eps, p[-1] - p[-2])
        itv = FeatherInterval(p[:-1] + (p[-1] - eps,), p[:-1] + (p[-1] + eps,))
    else:
        # upper twin (q, a, a): glue the branch below a to the arm above it
        if len(p) >= 3:
            eps = min(eps, p[-1] - p[-3])
        itv = FeatherInterval(p[:-2] + (p[-1] - eps,), p[:-1] + (p[-1] + eps,))
    return Chart(p, eps, itv)


# ---------------------------------------------------------------------------
# Homeomorphisms: flips, translations, homogeneity words.


def flip_apply(s: tuple, r: tuple) -> tuple:
    """The branch flip pinned at s (length >= 2): exchanges the two branches
    emanating from s[:-1]'s branch point.  An involution; the first case
    takes precedence when both patterns match."""
    s = fp_validate(s)
    r = fp_validate(r)
    n = len(s) - 1
    if n < 1:
        raise PreconditionError("flip needs a point of length >= 2")
    base = s[: n - 1]
    pivot = s[n - 1]
    if len(r) >= n + 1 and r[:n] == s[:n]:
        out = base + r[n:]
    elif len(r) >= n and r[: n - 1] == base and r[n - 1] >= pivot:
        out = base + (pivot,) + r[n - 1:]
    else:
        out = r
    return fp_validate(out)


@dataclass(frozen=True)
class FlipGen:
    pivot: tuple

    def apply(self, p: tuple) -> tuple:
        return flip_apply(self.pivot, p)

    def to_jsonable(self):
        from .rationals import fmt_ext
        return {"gen": "flip", "at": [fmt_ext(x) for x in self.pivot]}


@dataclass(frozen=True)
class FeatherTranslateGen:
    shift: Fraction

    def apply(self, p: tuple) -> tuple:
        return fp_translate(self.shift, p)

    def to_jsonable(self):
        from .rationals import fmt_ext
        return {"gen": "translate", "by": fmt_ext(self.shift)}


def normalize_to_line(s: tuple):
    """Word of flips taking s to the length-1 point (s_n): flip at each
    truncation of s, longest first.  Returns (word, resulting point)."""
    s = fp_validate(s)
    word = []
    cur = s
    for length in range(len(s), 1, -1):
        gen = FlipGen(s[:length])
        word.append(gen)
        cur = gen.apply(cur)
    assert cur == (s[-1],)
    return tuple(word), cur


def fp_move(p: tuple, q: tuple):
    """Homogeneity word taking p to q: straighten p to the line, translate,
    un-straighten along q's word."""
    wp, line_p = normalize_to_line(p)
    wq, line_q = normalize_to_line(q)
    word = list(wp)
    shift = line_q[0] - line_p[0]
    if shift != 0:
        word.append(FeatherTranslateGen(shift))
    word.extend(reversed(wq))  # flips are involutions, so reversal inverts
    return tuple(word)


def replay(word, p: tuple) -> tuple:
    for gen in word:
        p = gen.apply(p)
    return p


def twin_swap_flip(p: tuple) -> FlipGen:
    """A flip exchanging the twin pair through p (works for either twin)."""
    lower = p if fp_is_strict(p) else fp_twin(p)
    return FlipGen(lower + (lower[-1] + 1,))


# ---------------------------------------------------------------------------
# The contraction homotopy.


def homotopy_eval(t, s: tuple) -> tuple:
    """Deformation collapsing branch levels one by one: level n collapses
    onto its branch point during [1/(n+1), 1/n], and the surviving line
    slides left during [1, 2]."""
    t = Fraction(t)
    s = fp_validate(s)
    if not 0 <= t <= 2:
        raise PreconditionError("homotopy time must lie in [0, 2]")
    if t > 1:
        return (s[0] - t + 1,)
    return _homotopy_tree(t, s)


def _homotopy_tree(t, s):
    n = len(s) - 1
    if n == 0 or t <= Fraction(1, n + 1):
        return s
    if t <= Fraction(1, n):
        tp = n * (n + 1) * t - n
        x, y = s[n - 1], s[n]
        return s[:n] + ((1 - tp) * y + tp * x,)
    return _homotopy_tree(t, s[:n])


def homotopy_seam_limits(t0, s: tuple):
    """Left and right limit points of t |-> homotopy_eval(t, s) at a seam
    time t0 in {1} or {1/n}.  Returns (left, right); they are equal when the
    path does not jump, twins otherwise."""
    t0 = Fraction(t0)
    s = fp_validate(s)
    left = homotopy_eval(t0, s)  # the phi branch owns the closed endpoint
    if t0 == 1:
        right = (s[0],)
    else:
        n = 1 / t0
        assert n.denominator == 1
        n = n.numerator
        if len(s) - 1 >= n:
            right = s[:n]
        else:
            right = homotopy_eval(t0, s)
    return left, right


# ---------------------------------------------------------------------------
# The strict skeleton: a Hausdorff dense open set, maximal in the sense that
# adjoining any missing point creates a twin pair.


@dataclass(frozen=True)
class SkeletonHandle:
    """All points that are not upper twins, optionally conjugated by a flip
    so that a prescribed upper twin lands inside."""

    flip: FlipGen = None

    def contains(self, p: tuple) -> bool:
        q = self.flip.apply(p) if self.flip else p
        return fp_is_strict(q)

    def chart_inside(self, p: tuple) -> Chart:
        """A canonical chart at a member whose member set stays inside the
        handle (pure charts at strict points consist of strict points)."""
        if not self.contains(p):
            raise PreconditionError("point outside handle")
        if self.flip is None:
            return fp_chart(p, Fraction(1))
        # conjugated: any small chart works because the flip is a homeo;
        # certify by sampling is done by callers, the pure shape is enough
        return fp_chart(p, Fraction(1))

    def adjoin_witness(self, p: tuple):
        """For p outside the handle, the twin pair created by adjoining it:
        (p, fp_twin(p)) with the partner already inside."""
        if self.contains(p):
            raise PreconditionError("point already inside handle")
        partner = fp_twin(p)
        assert self.contains(partner)
        return (p, partner)


def strict_skeleton() -> SkeletonHandle:
    return SkeletonHandle()


def skeleton_through(p: tuple) -> SkeletonHandle:
    """Skeleton conjugate containing p (plain skeleton if p is strict)."""
    if fp_is_strict(p):
        return SkeletonHandle()
    return SkeletonHandle(twin_swap_flip(p))


def disjoint_branch_family(x, a, b) -> FeatherInterval:
    """The level-one branch interval {(x, r) : a < r < b}; for distinct x
    these are pairwise disjoint, an uncountable disjoint open family."""
    x, a, b = Fraction(x), Fraction(a), Fraction(b)
    if not x < a < b:
        raise PreconditionError("need x < a < b")
    return FeatherInterval((x, a), (x, b))
