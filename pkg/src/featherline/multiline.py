"""The k-fold line family: the everywhere doubled line (k=2), the tripled
line (k=3), the ordinary line (k=1), and the line with two origins (k=2 with
doubling restricted to the abscissa 0) -- plus the branching line.

Basic opens are waves: an open set downstairs with finitely many abscissae
removed and lifted to an upper level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .intervals import (FinSet, IntervalSet, iset_meet, iset_pick_point,
                        iset_remove_point)
from .rationals import NEG_INF, POS_INF, PreconditionError, fmt_ext


@dataclass(frozen=True)
class SpaceSpec:
    """Fiber count and which abscissae possess upper levels."""

    k: int
    doubling: object = "all"  # "all" or a FinSet of doubled abscissae

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError("fiber count must be >= 1")

    def is_doubled(self, x) -> bool:
        if self.k == 1:
            return False
        if self.doubling == "all":
            return True
        return x in self.doubling

    @property
    def name(self) -> str:
        if self.k == 1:
            return "line"
        if self.doubling == "all":
            return "doubled" if self.k == 2 else "multiline-k%d" % self.k
        return "two-origins" if self.k == 2 and tuple(self.doubling) == (Fraction(0),) else "restricted"


LINE = SpaceSpec(1)
DOUBLED = SpaceSpec(2)
TRIPLED = SpaceSpec(3)
TWO_ORIGINS = SpaceSpec(2, FinSet.of(0))


class MultiLinePoint(NamedTuple):
    x: Fraction
    level: int


def ml_point(spec: SpaceSpec, x, level: int) -> MultiLinePoint:
    x = Fraction(x)
    level = int(level)
    if not 0 <= level < spec.k:
        raise PreconditionError("level %d out of range for k=%d" % (level, spec.k))
    if level > 0 and not spec.is_doubled(x):
        raise PreconditionError("abscissa %s is not doubled" % fmt_ext(x))
    return MultiLinePoint(x, level)


@dataclass(frozen=True)
class Wave:
    """Basic open: (O minus lifted abscissae) downstairs, lifted points
    upstairs at their assigned levels."""

    spec: SpaceSpec
    parts: IntervalSet
    lift: tuple = ()  # sorted tuple of (abscissa, level) with level >= 1

    def __post_init__(self):
        object.__setattr__(self, "lift", tuple(sorted(
            (Fraction(x), int(j)) for x, j in dict(self.lift).items())))
        for x, j in self.lift:
            if not 1 <= j < self.spec.k:
                raise PreconditionError("lift level %d out of range" % j)
            if not self.parts.contains(x):
                raise PreconditionError("lifted abscissa %s outside the open set" % fmt_ext(x))
            if not self.spec.is_doubled(x):
                raise PreconditionError("lifted abscissa %s is not doubled" % fmt_ext(x))

    def lift_map(self) -> dict:
        return dict(self.lift)

    def contains(self, p: MultiLinePoint) -> bool:
        j = self.lift_map().get(p.x)
        if p.level == 0:
            return self.parts.contains(p.x) and j is None
        return j == p.level

    def is_empty(self) -> bool:
        return self.parts.is_empty()

    def is_connected(self) -> bool:
        return len(self.parts.intervals) == 1

    def down_projection(self) -> IntervalSet:
        """Open set of abscissae whose down point belongs to the wave."""
        out = self.parts
        for x, _ in self.lift:
            out = iset_remove_point(out, x)
        return out

    def __str__(self):
        lifts = ",".join("%s^%d" % (fmt_ext(x), j) for x, j in self.lift)
        return "W[%s-{%s}]" % (self.parts, lifts)


def full_wave(spec: SpaceSpec, lift=()) -> Wave:
    return Wave(spec, IntervalSet.full_line(), tuple(lift))


def wave_meet(w1: Wave, w2: Wave) -> Wave:
    """Single wave with membership equal to the intersection.  An abscissa
    lifted by the two waves to different levels (or lifted by only one) has
    no common point and is punched out of the open set."""
    if w1.spec != w2.spec:
        raise PreconditionError("waves from different spaces")
    parts = iset_meet(w1.parts, w2.parts)
    m1, m2 = w1.lift_map(), w2.lift_map()
    lift = {}
    for x in set(m1) | set(m2):
        if not parts.contains(x):
            continue
        j1, j2 = m1.get(x), m2.get(x)
        if j1 == j2:
            lift[x] = j1
        else:
            parts = iset_remove_point(parts, x)
    return Wave(w1.spec, parts, tuple(lift.items()))


def wave_member_levels(w: Wave, x) -> set:
    """Levels the wave occupies at abscissa x (empty, {0}, or one lift)."""
    j = w.lift_map().get(x)
    if j is not None:
        return {j}
    if w.parts.contains(x):
        return {0}
    return set()


# ---------------------------------------------------------------------------
# Homeomorphism generators.


@dataclass(frozen=True)
class TranslateGen:
    shift: Fraction

    def apply(self, p: MultiLinePoint) -> MultiLinePoint:
        return MultiLinePoint(p.x + self.shift, p.level)

    def apply_wave(self, w: Wave) -> Wave:
        parts = IntervalSet(tuple((lo + self.shift, hi + self.shift) for lo, hi in w.parts.intervals))
        return Wave(w.spec, parts, tuple((x + self.shift, j) for x, j in w.lift))

    def to_jsonable(self):
        return {"gen": "translate", "by": fmt_ext(self.shift)}


@dataclass(frozen=True)
class ExchangeGen:
    at: Fraction
    levels: tuple  # (i, j)

    def _swap(self, level: int) -> int:
        i, j = self.levels
        if level == i:
            return j
        if level == j:
            return i
        return level

    def apply(self, p: MultiLinePoint) -> MultiLinePoint:
        if p.x != self.at:
            return p
        return MultiLinePoint(p.x, self._swap(p.level))

    def apply_wave(self, w: Wave) -> Wave:
        lift = w.lift_map()
        if not w.parts.contains(self.at):
            return w
        cur = lift.get(self.at, 0)
        new = self._swap(cur)
        if new == cur:
            return w
        if new == 0:
            lift.pop(self.at, None)
        else:
            lift[self.at] = new
        return Wave(w.spec, w.parts, tuple(lift.items()))

    def to_jsonable(self):
        return {"gen": "exchange", "at": fmt_ext(self.at), "levels": list(self.levels)}


@dataclass(frozen=True)
class ReflectGen:
    about: Fraction

    def apply(self, p: MultiLinePoint) -> MultiLinePoint:
        return MultiLinePoint(2 * self.about - p.x, p.level)

    def apply_wave(self, w: Wave) -> Wave:
        c = 2 * self.about
        parts = IntervalSet(tuple(sorted((c - hi, c - lo) for lo, hi in w.parts.intervals)))
        return Wave(w.spec, parts, tuple((c - x, j) for x, j in w.lift))

    def to_jsonable(self):
        return {"gen": "reflect", "about": fmt_ext(self.about)}


def translate_t(spec: SpaceSpec, s, p: MultiLinePoint) -> MultiLinePoint:
    s = Fraction(s)
    _check_translation(spec, s)
    return TranslateGen(s).apply(p)


def _check_translation(spec: SpaceSpec, s: Fraction):
    if s == 0 or spec.doubling == "all" or spec.k == 1:
        return
    shifted = {x + s for x in spec.doubling}
    if shifted != set(spec.doubling.elements):
        raise PreconditionError("translation by %s does not preserve the doubling domain" % fmt_ext(s))


def exchange_e(spec: SpaceSpec, s, levels, p: MultiLinePoint) -> MultiLinePoint:
    s = Fraction(s)
    i, j = levels
    if not (0 <= i < spec.k and 0 <= j < spec.k):
        raise PreconditionError("exchange levels out of range")
    if {i, j} != {0} and i != j and not spec.is_doubled(s):
        raise PreconditionError("abscissa %s is not doubled" % fmt_ext(s))
    return ExchangeGen(s, (i, j)).apply(p)


def ml_move(spec: SpaceSpec, p: MultiLinePoint, q: MultiLinePoint, involutive=False):
    """Homeomorphism word taking p to q.  The involutive variant reflects
    about the midpoint and patches levels with exchanges; it swaps p and q
    and squares to the identity."""
    if spec.doubling != "all" and p.x != q.x:
        raise PreconditionError("restricted doubling domain: cannot move across abscissae")
    word = []
    if involutive:
        if p.x != q.x:
            word.append(ReflectGen((p.x + q.x) / 2))
        if p.level != q.level:
            pair = (p.level, q.level)
            word.append(ExchangeGen(q.x, pair))
            if p.x != q.x:
                word.append(ExchangeGen(p.x, pair))
    else:
        if p.x != q.x:
            word.append(TranslateGen(q.x - p.x))
        if p.level != q.level:
            word.append(ExchangeGen(q.x, (p.level, q.level)))
    return tuple(word)


def ml_replay(word, p: MultiLinePoint) -> MultiLinePoint:
    for gen in word:
        p = gen.apply(p)
    return p


def ml_replay_wave(word, w: Wave) -> Wave:
    for gen in word:
        w = gen.apply_wave(w)
    return w


# ---------------------------------------------------------------------------
# Witness generators.


def separating_waves(spec: SpaceSpec, p: MultiLinePoint, q: MultiLinePoint):
    """Disjoint waves around two points with distinct abscissae (or distinct
    levels at an undoubled abscissa never happens: such points coincide)."""
    if p.x == q.x:
        raise PreconditionError("same abscissa: not separable")
    d = abs(p.x - q.x) / 2
    wp = Wave(spec, IntervalSet.of((p.x - d, p.x + d)),
              ((p.x, p.level),) if p.level > 0 else ())
    wq = Wave(spec, IntervalSet.of((q.x - d, q.x + d)),
              ((q.x, q.level),) if q.level > 0 else ())
    return wp, wq


def rational_down_witness(w: Wave) -> MultiLinePoint:
    """A rational down point inside a nonempty wave (the down rationals are
    dense)."""
    if w.is_empty():
        raise PreconditionError("empty wave has no points")
    x = iset_pick_point(w.parts, avoid=[x for x, _ in w.lift])
    return MultiLinePoint(x, 0)


def chain_connect(spec: SpaceSpec, src: MultiLinePoint, dst: MultiLinePoint,
                  removed, window):
    """Try to link src to dst with a chain of connected waves avoiding the
    removed points.  Returns a list of waves, or None when the bounded
    construction finds no chain (reported as inconclusive, never as
    'disconnected')."""
    removed = frozenset(removed)
    if src in removed or dst in removed:
        raise PreconditionError("endpoints must not be removed")
    wlo, whi = Fraction(window[0]), Fraction(window[1])
    lo, hi = min(src.x, dst.x), max(src.x, dst.x)
    if not (wlo < lo and hi < whi):
        raise PreconditionError("window must contain the endpoint abscissae")

    # pad the span, stopping short of removed abscissae strictly outside it
    pad = min(Fraction(1), (lo - wlo) / 2, (whi - hi) / 2)
    for r in removed:
        if r.x < lo:
            pad = min(pad, (lo - r.x) / 2)
        elif r.x > hi:
            pad = min(pad, (r.x - hi) / 2)
    parts = IntervalSet.of((lo - pad, hi + pad))

    # endpoints at the same abscissa but different levels need two waves
    # overlapping away from that abscissa
    split = src.x == dst.x and src.level != dst.level

    required = {} if split else {src.x: src.level, dst.x: dst.level}
    lift = {}
    constrained = set(required) | {r.x for r in removed if parts.contains(r.x)}
    if split:
        constrained.discard(src.x)
    for x in constrained:
        forbidden = {r.level for r in removed if r.x == x}
        if x in required:
            choice = required[x]
            if choice in forbidden:
                return None
        else:
            allowed = [j for j in range(spec.k)
                       if j not in forbidden and (j == 0 or spec.is_doubled(x))]
            if not allowed:
                return None
            choice = allowed[0]
        if choice > 0:
            lift[x] = choice
    if split:
        links = []
        for endpoint in (src, dst):
            ext = dict(lift)
            if endpoint.level > 0:
                ext[endpoint.x] = endpoint.level
            links.append(Wave(spec, parts, tuple(ext.items())))
        assert links[0].contains(src) and links[1].contains(dst)
        assert not wave_meet(links[0], links[1]).is_empty()
        return links
    wave = Wave(spec, parts, tuple(lift.items()))
    assert wave.contains(src) and wave.contains(dst)
    return [wave]


def up_points_discrete_witnesses(spec: SpaceSpec, sample: FinSet, down_point=None):
    """For each sampled abscissa, a wave isolating its up point from the
    other sampled up points; optionally a wave showing a given down point
    avoids the up set entirely."""
    isolating = {}
    xs = list(sample)
    for x in xs:
        if not spec.is_doubled(x):
            raise PreconditionError("abscissa %s is not doubled" % fmt_ext(x))
        gaps = [abs(x - y) for y in xs if y != x]
        d = min(gaps) / 2 if gaps else Fraction(1)
        isolating[x] = Wave(spec, IntervalSet.of((x - d, x + d)), ((x, 1),))
    avoiding = None
    if down_point is not None:
        gaps = [abs(down_point.x - y) for y in xs if y != down_point.x]
        d = min(gaps) / 2 if gaps else Fraction(1)
        avoiding = Wave(spec, IntervalSet.of((down_point.x - d, down_point.x + d)), ())
    return isolating, avoiding


# ---------------------------------------------------------------------------
# The branching line: two copies of R glued along the negatives.


class BranchPoint(NamedTuple):
    x: Fraction
    side: str  # "L" or "R"; x < 0 is side-agnostic and canonicalized to "L"


def branch_point(x, side="L") -> BranchPoint:
    x = Fraction(x)
    if side not in ("L", "R"):
        raise PreconditionError("side must be L or R")
    if x < 0:
        side = "L"
    return BranchPoint(x, side)


@dataclass(frozen=True)
class BranchInterval:
    """Open interval (lo, hi) read on one side: its x >= 0 part carries the
    side tag, its negative part is shared."""

    lo: Fraction
    hi: Fraction
    side: str

    def __post_init__(self):
        if not self.lo < self.hi:
            raise PreconditionError("empty branch interval")
        if self.side not in ("L", "R"):
            raise PreconditionError("side must be L or R")

    def contains(self, p: BranchPoint) -> bool:
        if not self.lo < p.x < self.hi:
            return False
        return p.x < 0 or p.side == self.side

    def is_empty(self) -> bool:
        return False


def branch_interval(lo, hi, side) -> BranchInterval:
    return BranchInterval(Fraction(lo) if lo != NEG_INF else NEG_INF,
                          Fraction(hi) if hi != POS_INF else POS_INF, side)


def branch_meet(b1: BranchInterval, b2: BranchInterval) -> list:
    lo, hi = max(b1.lo, b2.lo), min(b1.hi, b2.hi)
    if b1.side == b2.side:
        return [BranchInterval(lo, hi, b1.side)] if lo < hi else []
    hi = min(hi, Fraction(0))  # different sides only share the negatives
    return [BranchInterval(lo, hi, "L")] if lo < hi else []


def branch_separating(p: BranchPoint, q: BranchPoint):
    """Disjoint basic opens around two separable branch points."""
    if p.x == q.x:
        if p.x == 0:
            raise PreconditionError("the two origins are not separable")
        d = abs(p.x) / 2
        return (BranchInterval(p.x - d, p.x + d, p.side),
                BranchInterval(q.x - d, q.x + d, q.side))
    d = abs(p.x - q.x) / 2
    return (BranchInterval(p.x - d, p.x + d, p.side),
            BranchInterval(q.x - d, q.x + d, q.side))
