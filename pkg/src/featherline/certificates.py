"""Certificates: finite, independently re-checkable witnesses.

Every boolean verdict in the engine ships one; `kernel.verify_certificate`
re-derives the attested fact from scratch without trusting the producer.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Certificate:
    kind: str
    payload: dict = field(default_factory=dict)


def separated_by(p, q, b1, b2) -> Certificate:
    return Certificate("separated-by", {"p": p, "q": q, "b1": b1, "b2": b2})


def twin_pair(p, q) -> Certificate:
    return Certificate("twin-pair", {"p": p, "q": q})


def uncovered(point, chosen) -> Certificate:
    return Certificate("uncovered", {"point": point, "chosen": tuple(chosen)})


def covered(probes, chosen) -> Certificate:
    return Certificate("covered", {"probes": tuple(probes), "chosen": tuple(chosen)})


def excluded_by(family, candidates) -> Certificate:
    """candidates: mapping candidate point -> index of the family member
    excluding it."""
    return Certificate("excluded-by", {"family": family, "candidates": dict(candidates)})


def chain(links, src, dst, removed) -> Certificate:
    return Certificate("chain", {"links": tuple(links), "src": src, "dst": dst,
                                 "removed": frozenset(removed)})


def homeo_word(word, src, dst, involutive=False) -> Certificate:
    return Certificate("homeo-word", {"word": tuple(word), "src": src, "dst": dst,
                                      "involutive": involutive})


def compact_cert(center, radius, closed_interval, enclosing) -> Certificate:
    return Certificate("compact", {"center": center, "radius": radius,
                                   "closed_interval": list(closed_interval),
                                   "enclosing": enclosing})


def maximal_hausdorff(x, handle, adjoin_samples) -> Certificate:
    """adjoin_samples: list of (outside point, partner inside) pairs showing
    that adjoining the outside point creates a non-separable pair."""
    return Certificate("maximal-hausdorff", {"x": x, "handle": handle,
                                             "adjoin_samples": tuple(adjoin_samples)})
