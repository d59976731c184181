"""Canonical text syntax for points, sets and basics, shared by the CLI and
the golden files.

    rationals        3, -1/2, inf, -inf
    interval sets    (0,1)u(2,3)   (-inf,inf)   empty
    finite sets      {0,1/2}
    cofinite sets    cofinite-excl{1,2}   cofinite-empty
    feather points   F(0,1,1)
    line points      D(3/2 @1)          (level after @, default 0)
    branch points    B(1,L)
    naturals         N(5)
    feather basics   FI[(0,0);(0,1)]
    waves            W[(-1,1)-{0^1}]
    branch basics    BI[(0,2)@L]
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import certificates as cert
from . import feather as fe
from . import multiline as ml
from .intervals import CofiniteSet, FinSet, IntervalSet
from .rationals import ParseError, fmt_ext, parse_ext

# ---------------------------------------------------------------------------
# Formatting.


def fmt_point(p) -> str:
    if isinstance(p, ml.MultiLinePoint):
        return "D(%s @%d)" % (fmt_ext(p.x), p.level)
    if isinstance(p, ml.BranchPoint):
        return "B(%s,%s)" % (fmt_ext(p.x), p.side)
    if isinstance(p, int):
        return "N(%d)" % p
    return "F(%s)" % ",".join(fmt_ext(c) for c in p)


def fmt_tuple(p) -> str:
    return "(%s)" % ",".join(fmt_ext(c) for c in p)


def fmt_basic(b) -> str:
    if isinstance(b, ml.Wave):
        lifts = ",".join("%s^%d" % (fmt_ext(x), j) for x, j in b.lift)
        return "W[%s-{%s}]" % (b.parts, lifts)
    if isinstance(b, fe.Chart):
        return "FI[%s;%s]" % (fmt_tuple(b.interval.lower), fmt_tuple(b.interval.upper))
    if isinstance(b, fe.FeatherInterval):
        return "FI[%s;%s]" % (fmt_tuple(b.lower), fmt_tuple(b.upper))
    if isinstance(b, ml.BranchInterval):
        return "BI[(%s,%s)@%s]" % (fmt_ext(b.lo), fmt_ext(b.hi), b.side)
    if isinstance(b, CofiniteSet):
        return str(b)
    if isinstance(b, fe.SkeletonHandle):
        if b.flip is None:
            return "strict-skeleton"
        return "strict-skeleton*flip%s" % fmt_tuple(b.flip.pivot)
    raise ParseError("unformattable basic %r" % (b,))


def jsonable(value):
    """Recursively convert engine values into JSON-serializable data."""
    if isinstance(value, cert.Certificate):
        return {"kind": value.kind, "payload": jsonable(value.payload)}
    if isinstance(value, dict):
        return {_key(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (ml.MultiLinePoint, ml.BranchPoint)):
        return fmt_point(value)
    if isinstance(value, (list, tuple)) and not _is_point(value):
        return [jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted((jsonable(v) for v in value), key=str)
    if isinstance(value, (ml.Wave, fe.Chart, fe.FeatherInterval,
                          ml.BranchInterval, CofiniteSet, fe.SkeletonHandle)):
        return fmt_basic(value)
    if isinstance(value, (ml.MultiLinePoint, ml.BranchPoint)):
        return fmt_point(value)
    if _is_point(value):
        return fmt_point(value)
    if isinstance(value, Fraction):
        return fmt_ext(value)
    if isinstance(value, float):
        return fmt_ext(value)
    if hasattr(value, "to_jsonable"):
        return value.to_jsonable()
    if isinstance(value, IntervalSet):
        return str(value)
    if isinstance(value, FinSet):
        return str(value)
    return value


def _key(k):
    if isinstance(k, (Fraction, float)):
        return fmt_ext(k)
    if isinstance(k, int):
        return str(k)
    return k


def _is_point(value):
    return (isinstance(value, tuple) and value
            and all(isinstance(c, Fraction) for c in value)
            and not isinstance(value, (ml.MultiLinePoint,)))


# ---------------------------------------------------------------------------
# Parsing.

_POINT_RE = re.compile(r"^([FDBN])\((.*)\)$")
_WAVE_RE = re.compile(r"^W\[(.*)-\{(.*)\}\]$")
_FI_RE = re.compile(r"^FI\[\((.*)\);\((.*)\)\]$")
_BI_RE = re.compile(r"^BI\[\((.*),(.*)\)@([LR])\]$")
_ISET_RE = re.compile(r"\(([^()]*),([^()]*)\)")


def parse_point(text: str, spec: ml.SpaceSpec = None):
    text = text.strip()
    m = _POINT_RE.match(text)
    if not m:
        raise ParseError("cannot parse point %r" % text)
    tag, body = m.groups()
    if tag == "F":
        try:
            return fe.fp_validate(tuple(Fraction(parse_ext(c)) for c in body.split(",")))
        except Exception as exc:
            raise ParseError("invalid feather point %r: %s" % (text, exc)) from exc
    if tag == "D":
        if "@" in body:
            xs, lvl = body.split("@")
            level = int(lvl)
        else:
            xs, level = body, 0
        x = parse_ext(xs)
        if spec is not None:
            return ml.ml_point(spec, x, level)
        return ml.MultiLinePoint(Fraction(x), level)
    if tag == "B":
        xs, side = body.rsplit(",", 1)
        return ml.branch_point(Fraction(parse_ext(xs)), side.strip())
    if tag == "N":
        return int(body)
    raise ParseError("unknown point tag %r" % tag)


def parse_iset(text: str) -> IntervalSet:
    text = text.strip()
    if text in ("empty", ""):
        return IntervalSet.empty()
    pairs = []
    rest = text
    for part in text.split("u"):
        m = _ISET_RE.match(part.strip())
        if not m or m.group(0) != part.strip():
            raise ParseError("cannot parse interval set %r" % rest)
        pairs.append((parse_ext(m.group(1)), parse_ext(m.group(2))))
    return IntervalSet.of(*pairs)


def parse_finset(text: str) -> FinSet:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError("cannot parse finite set %r" % text)
    body = text[1:-1].strip()
    if not body:
        return FinSet.empty()
    return FinSet.of(*(Fraction(parse_ext(c)) for c in body.split(",")))


def parse_cofinite(text: str) -> CofiniteSet:
    text = text.strip()
    if text == "cofinite-empty":
        return CofiniteSet.empty()
    if text.startswith("cofinite-excl{") and text.endswith("}"):
        body = text[len("cofinite-excl{"):-1].strip()
        if not body:
            return CofiniteSet.ground()
        return CofiniteSet.excl(*(int(n) for n in body.split(",")))
    raise ParseError("cannot parse cofinite set %r" % text)


def parse_basic(text: str, spec: ml.SpaceSpec = None):
    text = text.strip()
    m = _WAVE_RE.match(text)
    if m:
        parts = parse_iset(m.group(1))
        lift = []
        body = m.group(2).strip()
        if body:
            for item in body.split(","):
                if "^" not in item:
                    raise ParseError("lift entries look like x^level: %r" % item)
                xs, js = item.split("^")
                lift.append((Fraction(parse_ext(xs)), int(js)))
        return ml.Wave(spec or ml.DOUBLED, parts, tuple(lift))
    m = _FI_RE.match(text)
    if m:
        lower = tuple(Fraction(parse_ext(c)) for c in m.group(1).split(","))
        upper = tuple(Fraction(parse_ext(c)) for c in m.group(2).split(","))
        try:
            return fe.FeatherInterval(lower, upper)
        except Exception as exc:
            raise ParseError("invalid feather interval %r: %s" % (text, exc)) from exc
    m = _BI_RE.match(text)
    if m:
        return ml.branch_interval(parse_ext(m.group(1)), parse_ext(m.group(2)), m.group(3))
    if text.startswith("cofinite"):
        return parse_cofinite(text)
    if text == "strict-skeleton":
        return fe.strict_skeleton()
    if text.startswith("strict-skeleton*flip"):
        pivot = tuple(Fraction(parse_ext(c))
                      for c in text[len("strict-skeleton*flip("):-1].split(","))
        return fe.SkeletonHandle(fe.FlipGen(fe.fp_validate(pivot)))
    raise ParseError("cannot parse basic open %r" % text)
