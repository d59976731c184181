"""Exact scalar arithmetic: arbitrary-precision rationals extended with -inf/+inf.

Finite values are `fractions.Fraction` (always in lowest terms with positive
denominator); the two infinities are the float sentinels, which compare
correctly against Fraction.
"""

from __future__ import annotations

from fractions import Fraction

NEG_INF = float("-inf")
POS_INF = float("inf")

# ExtRat is Fraction | float, where the only floats allowed are +-inf.
ExtRat = "Fraction | float"


def rat(p, q=1) -> Fraction:
    return Fraction(p, q)


def is_finite(x) -> bool:
    return isinstance(x, Fraction) or isinstance(x, int)


def as_ext(x):
    """Coerce ints/Fractions to Fraction, pass infinities through."""
    if isinstance(x, float):
        if x == POS_INF or x == NEG_INF:
            return x
        raise ValueError("non-infinite float endpoint: %r" % x)
    return Fraction(x)


def fmt_ext(x) -> str:
    if x == POS_INF and isinstance(x, float):
        return "inf"
    if x == NEG_INF and isinstance(x, float):
        return "-inf"
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_ext(s: str):
    s = s.strip()
    if s in ("inf", "+inf", "oo", "+oo"):
        return POS_INF
    if s in ("-inf", "-oo"):
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("cannot parse rational %r" % s) from exc


class ParseError(ValueError):
    """Malformed text syntax (CLI exit status 1)."""


class PreconditionError(ValueError):
    """Operation precondition violated (CLI exit status 2)."""
