"""Points, unit directions, and projection widths in R^d.

Everything downstream (closed forms, direction families, optimizers) is
built on the two primitives here: Euclidean distance and the projection
width of a point set along a unit direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance on the squared norm of a unit vector, and on the
# coordinate sum of a sum-zero vector. Well above double rounding, far
# below any geometric scale in play.
UNIT_NORM_TOL = 1e-12
SUM_ZERO_TOL = 1e-12


class DimensionError(ValueError):
    """Invalid or mismatched ambient dimension."""


class PreconditionError(ValueError):
    """An operation was called outside its stated hypothesis."""


@dataclass(frozen=True)
class Vector:
    """Immutable dense coordinate vector in R^d."""

    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        coords = tuple(float(c) for c in self.coords)
        if len(coords) == 0:
            raise DimensionError("a vector needs at least one coordinate")
        if not all(math.isfinite(c) for c in coords):
            raise ValueError("vector coordinates must be finite")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def dot(self, other: Vector) -> float:
        if other.dim != self.dim:
            raise DimensionError(
                f"dimension mismatch: {self.dim} vs {other.dim}"
            )
        return math.fsum(a * b for a, b in zip(self.coords, other.coords))

    def norm_squared(self) -> float:
        return math.fsum(c * c for c in self.coords)

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def coordinate_sum(self) -> float:
        return math.fsum(self.coords)

    def scaled(self, s: float) -> Vector:
        return Vector(tuple(s * c for c in self.coords))


@dataclass(frozen=True)
class Direction:
    """Unit vector, optionally constrained to the sum-zero subspace.

    ``sum_zero`` marks directions orthogonal to the all-ones vector,
    i.e. parallel to the hyperplane that carries the basis-vector
    simplex. Both invariants are validated on construction.
    """

    vec: Vector
    sum_zero: bool = False

    def __post_init__(self) -> None:
        nsq = self.vec.norm_squared()
        if abs(nsq - 1.0) > UNIT_NORM_TOL:
            raise PreconditionError(
                f"direction must be a unit vector, got squared norm {nsq!r}"
            )
        if self.sum_zero and abs(self.vec.coordinate_sum()) > SUM_ZERO_TOL:
            raise PreconditionError(
                "direction flagged sum-zero has a nonzero coordinate sum"
            )

    @property
    def dim(self) -> int:
        return self.vec.dim

    @property
    def coords(self) -> tuple[float, ...]:
        return self.vec.coords

    def negated(self) -> Direction:
        return Direction(self.vec.scaled(-1.0), self.sum_zero)

    @classmethod
    def normalized(
        cls, coords: tuple[float, ...] | list[float], sum_zero: bool = False
    ) -> Direction:
        """Scale ``coords`` to unit length and wrap it as a Direction."""
        v = Vector(tuple(coords))
        n = v.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(v.scaled(1.0 / n), sum_zero)


@dataclass(frozen=True)
class PointSet:
    """Nonempty list of points sharing one ambient dimension.

    Duplicate points are legal; they never change a projection width.
    """

    points: tuple[Vector, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        if len(points) == 0:
            raise ValueError("a point set must be nonempty")
        d = points[0].dim
        if any(p.dim != d for p in points):
            raise DimensionError("all points must share one dimension")
        object.__setattr__(self, "points", points)

    @property
    def dim(self) -> int:
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DimensionError(f"simplex order must be a positive integer, got {n!r}")


def standard_simplex_vertices(n: int) -> PointSet:
    """Vertices of the basis-vector n-simplex: e_1, ..., e_{n+1} in R^{n+1}.

    All pairwise distances are sqrt(2), and every vertex lies on the
    hyperplane where the coordinates sum to 1.
    """
    _check_order(n)
    points = []
    for i in range(n + 1):
        coords = [0.0] * (n + 1)
        coords[i] = 1.0
        points.append(Vector(tuple(coords)))
    return PointSet(tuple(points))


def regular_simplex_vertices(n: int) -> PointSet:
    """Vertices of the unit-edge n-simplex, embedded in R^{n+1}.

    The basis-vector simplex scaled by 1/sqrt(2); pairwise distances 1.
    """
    _check_order(n)
    s = 1.0 / math.sqrt(2.0)
    base = standard_simplex_vertices(n)
    return PointSet(tuple(p.scaled(s) for p in base))


def projection_width(u: Direction, points: PointSet) -> float:
    """Spread of the point set's dot products with ``u``: max minus min."""
    if u.dim != points.dim:
        raise DimensionError(
            f"dimension mismatch: direction {u.dim} vs points {points.dim}"
        )
    dots = [u.vec.dot(p) for p in points]
    return max(dots) - min(dots)


def distance(a: Vector, b: Vector) -> float:
    """Euclidean distance between two points."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return math.sqrt(math.fsum((x - y) ** 2 for x, y in zip(a.coords, b.coords)))
