"""Exact closed-form widths and radii of regular simplices.

Every quantity here is a square: width^2, radius^2, and the squared
two-value coordinates are all rationals, so they are carried as exact
`fractions.Fraction` values. Square roots are taken only at presentation
boundaries (CLI output, float helpers).

Conventions, for the n-simplex with n >= 1:

* standard: convex hull of the n+1 standard basis vectors of R^{n+1},
  edge length sqrt(2);
* regular: the same simplex scaled by 1/sqrt(2), edge length 1.

Width of the standard simplex, squared:

    4/(n+1)              for odd n
    4(n+1)/(n(n+2))      for even n

and the regular simplex gets exactly half of each squared value.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from .geometry import DimensionError, Vector

# Public alias: squared widths, radii, and two-value coordinates are
# exact rationals in lowest terms with positive denominator.
ExactScalar = Fraction

# Guard on integer growth in the rational formulas. The formulas are
# O(1) rationals, so this is safety, not necessity.
MAX_ORDER = 10**6


class SimplexKind(Enum):
    STANDARD = "standard"
    REGULAR = "regular"


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DimensionError(f"simplex order must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise DimensionError(f"simplex order is capped at {MAX_ORDER}")


def _check_low_count(n: int, t: int) -> None:
    _check_order(n)
    if not isinstance(t, int) or isinstance(t, bool) or not 1 <= t <= n:
        raise ValueError(f"low-coordinate count t must lie in 1..{n}, got {t!r}")


def width_squared(n: int, kind: SimplexKind) -> Fraction:
    """Exact squared width of the n-simplex of the given kind."""
    _check_order(n)
    if n % 2 == 1:
        std = Fraction(4, n + 1)
    else:
        std = Fraction(4 * (n + 1), n * (n + 2))
    if kind is SimplexKind.STANDARD:
        return std
    if kind is SimplexKind.REGULAR:
        return std / 2
    raise TypeError(f"unknown simplex kind: {kind!r}")


def width(n: int, kind: SimplexKind) -> float:
    """Width as a float; the square root of `width_squared`."""
    return math.sqrt(width_squared(n, kind))


def center(n: int) -> Vector:
    """Center of the standard simplex: all coordinates 1/(n+1).

    Lies on the hyperplane where the coordinates sum to 1, at equal
    distance from every vertex.
    """
    _check_order(n)
    return Vector((1.0 / (n + 1),) * (n + 1))


def circumdistance_squared(n: int) -> Fraction:
    """Squared distance from the standard simplex's center to each vertex: n/(n+1)."""
    _check_order(n)
    return Fraction(n, n + 1)


def indistance_squared(n: int) -> Fraction:
    """Squared radius of the largest ball around the center that fits in the
    standard simplex within its carrying hyperplane: 1/(n(n+1)).

    Equals the squared distance from the center to any facet centroid.
    """
    _check_order(n)
    return Fraction(1, n * (n + 1))


def inradius_squared(n: int) -> Fraction:
    """Squared inradius of the unit-edge simplex: 1/(2n(n+1))."""
    _check_order(n)
    return Fraction(1, 2 * n * (n + 1))


def circumradius_squared(n: int) -> Fraction:
    """Squared circumradius of the unit-edge simplex: n/(2(n+1))."""
    _check_order(n)
    return Fraction(n, 2 * (n + 1))


def width_for_t(n: int, t: int) -> Fraction:
    """Squared projection width of the standard simplex along any unit
    sum-zero direction with exactly t equal low coordinates.

    Equals (n+1)/(t(n+1-t)); minimized over t at t = (n+1)//2 (and, for
    even n, equally at t = n/2 + 1 by the t <-> n+1-t symmetry).
    """
    _check_low_count(n, t)
    return Fraction(n + 1, t * (n + 1 - t))


def alpha_beta_squared(n: int, t: int) -> tuple[Fraction, Fraction]:
    """Exact squares of the two coordinate values of a unit sum-zero
    direction with t low coordinates.

    alpha^2 = (n+1-t)/(t(n+1)) and beta^2 = t/((n+1-t)(n+1)). They
    satisfy t*alpha^2 + (n+1-t)*beta^2 = 1 identically.
    """
    _check_low_count(n, t)
    return (
        Fraction(n + 1 - t, t * (n + 1)),
        Fraction(t, (n + 1 - t) * (n + 1)),
    )


def alpha_beta(n: int, t: int) -> tuple[float, float]:
    """The two coordinate values (alpha < 0 < beta) as floats.

    alpha sits on the t low coordinates, beta on the remaining n+1-t,
    making the direction unit and sum-zero. Their gap beta - alpha is
    the projection width sqrt(width_for_t(n, t)).
    """
    a_sq, b_sq = alpha_beta_squared(n, t)
    return -math.sqrt(a_sq), math.sqrt(b_sq)
