"""Optimal direction families for the simplex width.

The width of the standard n-simplex is achieved by unit sum-zero
directions taking exactly two coordinate values alpha < 0 < beta, with
t = (n+1)//2 coordinates at alpha. For odd n that family is the set of
balanced sign vectors scaled by 1/sqrt(n+1), and no other direction
achieves the width; for even n it is the t = n/2 two-value family (with
no uniqueness claim).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .closed_form import alpha_beta
from .geometry import DimensionError, Direction, PreconditionError, Vector

# C(21, 10) ~= 352k directions keeps exhaustive sweeps tractable.
ENUMERATION_CAP = 20

# Per-coordinate tolerance for family membership, after sign alignment.
# Optimizer outputs arrive with roughly 1e-8 noise; the two coordinate
# values are separated by at least the width itself, which is orders of
# magnitude larger.
MEMBERSHIP_TOL = 1e-10


@dataclass(frozen=True)
class TwoValueDirection:
    """A unit sum-zero direction with t coordinates at alpha(n, t) (on
    ``low_set``) and the remaining n+1-t at beta(n, t)."""

    n: int
    t: int
    low_set: frozenset[int]
    direction: Direction


def optimal_t(n: int) -> int:
    """Low-coordinate count minimizing the two-value width: (n+1)//2."""
    if n < 1:
        raise DimensionError(f"simplex order must be positive, got {n!r}")
    return (n + 1) // 2


def make_two_value_direction(
    n: int, t: int, low_set: frozenset[int] | set[int]
) -> TwoValueDirection:
    """Build the two-value direction with alpha on ``low_set``."""
    low = frozenset(int(i) for i in low_set)
    if any(i < 0 or i > n for i in low):
        raise IndexError(f"low_set indices must lie in 0..{n}")
    if len(low) != t:
        raise ValueError(
            f"low_set must contain exactly t={t} distinct indices, got {len(low)}"
        )
    a, b = alpha_beta(n, t)
    coords = tuple(a if i in low else b for i in range(n + 1))
    return TwoValueDirection(
        n=n, t=t, low_set=low, direction=Direction(Vector(coords), sum_zero=True)
    )


def enumerate_optimal_directions(n: int) -> list[Direction]:
    """All width-achieving directions of the standard n-simplex.

    Odd n: the C(n+1, (n+1)/2) balanced sign vectors scaled by
    1/sqrt(n+1), negations included. Even n: the C(n+1, n/2) two-value
    directions with t = n/2, one per choice of low coordinates.
    """
    if n < 1:
        raise DimensionError(f"simplex order must be positive, got {n!r}")
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"exhaustive enumeration is capped at n <= {ENUMERATION_CAP}, got {n}"
        )
    t = optimal_t(n)
    return [
        make_two_value_direction(n, t, frozenset(low)).direction
        for low in combinations(range(n + 1), t)
    ]


def is_optimal_direction(n: int, u: Direction) -> bool:
    """Structural membership test against the optimal family.

    True iff u or -u matches, coordinate by coordinate within
    MEMBERSHIP_TOL, a two-value direction with t = (n+1)//2. For odd n a
    True/False answer is a complete optimality verdict; for even n True
    means membership in the constructed family, with no claim that
    False implies a suboptimal direction.
    """
    if u.dim != n + 1:
        raise DimensionError(f"direction has dimension {u.dim}, expected {n + 1}")
    nsq = u.vec.norm_squared()
    if abs(nsq - 1.0) > 1e-12:
        raise PreconditionError("direction must be a unit vector")
    if abs(u.vec.coordinate_sum()) > 1e-12:
        raise PreconditionError("direction must be sum-zero")

    t = optimal_t(n)
    a, b = alpha_beta(n, t)
    for coords in (u.coords, tuple(-c for c in u.coords)):
        low = sum(1 for c in coords if abs(c - a) <= MEMBERSHIP_TOL)
        high = sum(1 for c in coords if abs(c - b) <= MEMBERSHIP_TOL)
        # low + high == n+1 forces every coordinate onto one of the two
        # values; the values are too far apart to double-match.
        if low == t and high == n + 1 - t:
            return True
    return False
