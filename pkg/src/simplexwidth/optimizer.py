"""Numerical width minimization over unit directions.

Three independent routes to the width of a point set:

* `minimize_width`: projected subgradient descent on the sphere, with
  seeded random restarts and a final snap onto the nearest two-value
  direction. Returns an upper bound on the true width.
* `grid_width_oracle`: brute-force sweep of a uniform angular grid of
  the (at most 3-dimensional) search space. Slow but assumption-free.
* `two_value_enumeration_width`: exact rational scan over the
  two-value family, the structural optimum for simplices.

The objective f(u) = max_p <u, p> - min_p <u, p> is a maximum of linear
functions minus a minimum of linear functions, so p_max - p_min is a
valid subgradient at u; ties are broken by lowest vertex index to keep
every run deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

import numpy as np

from .closed_form import width_for_t
from .directions import make_two_value_direction
from .geometry import DimensionError, Direction, PointSet, Vector


class Method(Enum):
    SUBGRADIENT = "subgradient"
    GRID = "grid"
    ENUMERATION = "enumeration"


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for `minimize_width`.

    The step schedule is step_init/sqrt(iter), the standard choice for
    non-smooth convex objectives; the width landscape on the sphere has
    one local basin per face pair, so restarts are the remedy, each
    initialized from its own sub-seed of ``seed``.
    """

    restarts: int = 64
    max_iters: int = 10_000
    step_init: float = 1.0
    tol: float = 1e-10
    seed: int = 0
    constrain_sum_zero: bool = False

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if not self.step_init > 0:
            raise ValueError("step_init must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class WidthResult:
    """Achieved width, the direction achieving it, and run metadata.

    ``width_squared_exact`` is populated only by the exact enumeration
    route, where the squared width is a rational computed without any
    floating point.
    """

    width: float
    direction: Direction
    iterations: int
    restarts_used: int
    converged: bool
    method: Method
    width_squared_exact: Fraction | None = None


def _points_matrix(points: PointSet) -> np.ndarray:
    return np.array([p.coords for p in points], dtype=float)


def _batch_widths(dirs: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Projection widths of many directions at once; rows of ``dirs``
    are directions, rows of ``pts`` are points."""
    dots = dirs @ pts.T
    return dots.max(axis=1) - dots.min(axis=1)


def _restart_inits(cfg: OptimizerConfig, dim: int) -> np.ndarray:
    """One unit start per restart, drawn from per-restart sub-seeds:
    Gaussian sample, project into the constraint subspace, normalize."""
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    rows = np.empty((cfg.restarts, dim))
    for k, child in enumerate(children):
        rng = np.random.default_rng(child)
        v = rng.standard_normal(dim)
        if cfg.constrain_sum_zero:
            v = v - v.mean()
        norm = np.linalg.norm(v)
        while norm < 1e-12:
            v = rng.standard_normal(dim)
            if cfg.constrain_sum_zero:
                v = v - v.mean()
            norm = np.linalg.norm(v)
        rows[k] = v / norm
    return rows


def _snap_two_valued(u: np.ndarray, constrain_sum_zero: bool) -> np.ndarray | None:
    """Candidate polish: clamp coordinates to the iterate's own extremes
    by sign, re-center if constrained, renormalize. Recovers the exact
    two-value direction from a noisy near-optimal iterate."""
    lo, hi = u.min(), u.max()
    snapped = np.where(u < 0, lo, hi)
    if constrain_sum_zero:
        snapped = snapped - snapped.mean()
    norm = np.linalg.norm(snapped)
    if norm < 1e-12:
        return None
    return snapped / norm


def minimize_width(points: PointSet, cfg: OptimizerConfig) -> WidthResult:
    """Best-of-restarts projected subgradient descent for the width.

    Each iteration takes the subgradient p_max - p_min at the current
    iterate (ties to the lowest vertex index), projects out the all-ones
    component when constrained, projects out the radial component, steps
    by step_init/sqrt(iter), and renormalizes. The result is an upper
    bound on the true width; ``converged`` records whether the final
    iteration improved the best width by less than ``tol``.

    NOTE: a point set that spans an affine hyperplane not through the
    origin (such as a simplex on the coordinates-sum-to-one hyperplane)
    has unconstrained width 0 along the hyperplane's normal; pass
    ``constrain_sum_zero=True`` to search parallel to that hyperplane.
    """
    dim = points.dim
    if cfg.constrain_sum_zero and dim < 2:
        raise DimensionError(
            "the sum-zero constraint leaves no directions in dimension 1"
        )
    pts = _points_matrix(points)
    r = cfg.restarts

    inits = _restart_inits(cfg, dim)
    U = inits.copy()
    rows = np.arange(r)

    dots = U @ pts.T
    widths = dots.max(axis=1) - dots.min(axis=1)
    best_w = widths.copy()
    best_u = U.copy()
    last_gain = np.zeros(r)

    for k in range(1, cfg.max_iters + 1):
        hi = np.argmax(dots, axis=1)
        lo = np.argmin(dots, axis=1)
        g = pts[hi] - pts[lo]
        if cfg.constrain_sum_zero:
            g = g - g.mean(axis=1, keepdims=True)
        g = g - np.sum(g * U, axis=1, keepdims=True) * U
        U = U - (cfg.step_init / math.sqrt(k)) * g
        if cfg.constrain_sum_zero:
            U = U - U.mean(axis=1, keepdims=True)
        norms = np.linalg.norm(U, axis=1, keepdims=True)
        degenerate = norms[:, 0] < 1e-12
        if degenerate.any():
            U[degenerate] = inits[degenerate]
            norms[degenerate] = 1.0
        U = U / norms

        dots = U @ pts.T
        widths = dots.max(axis=1) - dots.min(axis=1)
        improved = widths < best_w
        last_gain = np.where(improved, best_w - widths, 0.0)
        best_u[improved] = U[improved]
        best_w = np.where(improved, widths, best_w)

    # Keep a snap only when it does not increase the width.
    for j in range(r):
        snapped = _snap_two_valued(best_u[j], cfg.constrain_sum_zero)
        if snapped is None:
            continue
        projections = pts @ snapped
        w = float(projections.max() - projections.min())
        if w <= best_w[j]:
            best_u[j] = snapped
            best_w[j] = w

    winner = int(np.argmin(best_w))
    u = best_u[winner]
    direction = Direction(Vector(tuple(u)), sum_zero=cfg.constrain_sum_zero)
    return WidthResult(
        width=float(best_w[winner]),
        direction=direction,
        iterations=cfg.max_iters,
        restarts_used=r,
        converged=bool(last_gain[winner] < cfg.tol),
        method=Method.SUBGRADIENT,
    )


def _constraint_basis(dim: int, constrain_sum_zero: bool) -> np.ndarray:
    """Orthonormal rows spanning the search subspace."""
    if not constrain_sum_zero:
        return np.eye(dim)
    _, _, vh = np.linalg.svd(np.ones((1, dim)))
    return vh[1:]


def grid_directions(
    dim: int,
    resolution: int,
    constrain_sum_zero: bool = False,
    chunk_rows: int = 200_000,
) -> Iterator[np.ndarray]:
    """Uniform angular grid of the unit sphere of the search subspace,
    yielded as chunks of direction rows in the ambient dimension.

    Supports search dimensions 1 to 3 (a pair of antipodes, a circle
    with ``resolution`` angles, or a sphere with ``resolution``
    subdivisions per polar and azimuthal angle).
    """
    if resolution < 8:
        raise ValueError("grid resolution must be at least 8")
    search_dim = dim - 1 if constrain_sum_zero else dim
    if constrain_sum_zero and dim < 2:
        raise DimensionError(
            "the sum-zero constraint leaves no directions in dimension 1"
        )
    if not 1 <= search_dim <= 3:
        raise ValueError(
            f"grid search supports subspace dimensions 1..3, got {search_dim}"
        )
    basis = _constraint_basis(dim, constrain_sum_zero)

    if search_dim == 1:
        yield np.vstack([basis[0], -basis[0]])
        return

    if search_dim == 2:
        theta = 2.0 * np.pi * np.arange(resolution) / resolution
        for start in range(0, resolution, chunk_rows):
            block = theta[start : start + chunk_rows]
            yield np.outer(np.cos(block), basis[0]) + np.outer(
                np.sin(block), basis[1]
            )
        return

    # Two-sphere: polar angle 0..pi inclusive, azimuth 0..2pi exclusive.
    polar = np.pi * np.arange(resolution + 1) / resolution
    azimuth = 2.0 * np.pi * np.arange(resolution) / resolution
    cos_az, sin_az = np.cos(azimuth), np.sin(azimuth)
    polar_per_chunk = max(1, chunk_rows // resolution)
    for start in range(0, resolution + 1, polar_per_chunk):
        block = polar[start : start + polar_per_chunk]
        sin_p, cos_p = np.sin(block), np.cos(block)
        # (polar block, azimuth, ambient dim)
        chunk = (
            sin_p[:, None, None]
            * (
                cos_az[None, :, None] * basis[0][None, None, :]
                + sin_az[None, :, None] * basis[1][None, None, :]
            )
            + cos_p[:, None, None] * basis[2][None, None, :]
        )
        yield chunk.reshape(-1, dim)


def grid_width_oracle(
    points: PointSet, resolution: int, constrain_sum_zero: bool = False
) -> WidthResult:
    """Exhaustive width over a uniform angular grid of the search space.

    The returned minimum is within O(diam(P)/resolution) of the true
    width. Only search dimensions up to 3 are supported; use it as a
    desk-scale oracle, not a general solver.
    """
    pts = _points_matrix(points)
    best_w = math.inf
    best_u: np.ndarray | None = None
    evaluated = 0
    for chunk in grid_directions(points.dim, resolution, constrain_sum_zero):
        widths = _batch_widths(chunk, pts)
        j = int(np.argmin(widths))
        if widths[j] < best_w:
            best_w = float(widths[j])
            best_u = chunk[j].copy()
        evaluated += len(chunk)
    assert best_u is not None
    direction = Direction(Vector(tuple(best_u)), sum_zero=constrain_sum_zero)
    return WidthResult(
        width=best_w,
        direction=direction,
        iterations=evaluated,
        restarts_used=0,
        converged=True,
        method=Method.GRID,
    )


def two_value_enumeration_width(n: int) -> WidthResult:
    """Exact width of the standard n-simplex by scanning the two-value
    family over the low-coordinate count t.

    Every candidate width (n+1)/(t(n+1-t)) is an exact rational, so the
    minimum is exact; the witness puts the low coordinates first. Ties
    (even n) resolve to the smaller t.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DimensionError(f"simplex order must be a positive integer, got {n!r}")
    best_t = min(range(1, n + 1), key=lambda t: (width_for_t(n, t), t))
    w_sq = width_for_t(n, best_t)
    witness = make_two_value_direction(n, best_t, frozenset(range(best_t)))
    return WidthResult(
        width=math.sqrt(w_sq),
        direction=witness.direction,
        iterations=n,
        restarts_used=0,
        converged=True,
        method=Method.ENUMERATION,
        width_squared_exact=w_sq,
    )
