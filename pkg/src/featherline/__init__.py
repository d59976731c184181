"""featherline: an exact symbolic engine for non-Hausdorff 1-manifolds.

Implements the complete feather (everywhere branching line), the k-fold
doubled lines, the line with two origins and the branching line, together
with certificate-producing decision procedures for separation, density,
convergence, covers, Baire intersections and compactness.
"""

from .intervals import CofiniteSet, FinSet, IntervalSet
from .multiline import DOUBLED, LINE, TRIPLED, TWO_ORIGINS, SpaceSpec, Wave
from .rationals import NEG_INF, POS_INF, ParseError, PreconditionError

__all__ = [
    "CofiniteSet", "FinSet", "IntervalSet", "SpaceSpec", "Wave",
    "DOUBLED", "LINE", "TRIPLED", "TWO_ORIGINS",
    "NEG_INF", "POS_INF", "ParseError", "PreconditionError",
]
