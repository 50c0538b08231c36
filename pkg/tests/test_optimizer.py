"""Subgradient minimizer, dense grid oracle, and exact enumeration."""

import math
from fractions import Fraction

import numpy as np
import pytest

from simplexwidth.closed_form import SimplexKind, width_squared
from simplexwidth.directions import is_optimal_direction
from simplexwidth.geometry import (
    DimensionError,
    Direction,
    PointSet,
    Vector,
    projection_width,
    standard_simplex_vertices,
)
from simplexwidth.optimizer import (
    Method,
    OptimizerConfig,
    grid_directions,
    grid_width_oracle,
    minimize_width,
    two_value_enumeration_width,
)
from simplexwidth.optimizer import _batch_widths, _points_matrix


def unit_square():
    return PointSet(
        tuple(Vector(c) for c in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
    )


def test_batch_widths_match_projection_width():
    # the vectorized objective must agree with the scalar definition
    points = standard_simplex_vertices(4)
    pts = _points_matrix(points)
    rng = np.random.default_rng(11)
    dirs = rng.standard_normal((100, 5))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    batched = _batch_widths(dirs, pts)
    for row, w in zip(dirs, batched):
        expected = projection_width(Direction(Vector(tuple(row))), points)
        assert abs(w - expected) <= 1e-12


def test_config_validation():
    with pytest.raises(ValueError):
        OptimizerConfig(restarts=0)
    with pytest.raises(ValueError):
        OptimizerConfig(max_iters=0)
    with pytest.raises(ValueError):
        OptimizerConfig(step_init=0.0)
    with pytest.raises(ValueError):
        OptimizerConfig(tol=0.0)
    with pytest.raises(ValueError):
        OptimizerConfig(seed=-1)
    with pytest.raises(ValueError):
        OptimizerConfig(seed=2**64)


def test_minimize_width_is_deterministic():
    cfg = OptimizerConfig(restarts=8, max_iters=500, seed=123, constrain_sum_zero=True)
    points = standard_simplex_vertices(3)
    a = minimize_width(points, cfg)
    b = minimize_width(points, cfg)
    assert a.width == b.width
    assert a.direction.coords == b.direction.coords
    assert a.method is Method.SUBGRADIENT
    assert a.iterations == 500
    assert a.restarts_used == 8


def test_minimize_width_single_point_is_zero():
    cfg = OptimizerConfig(restarts=4, max_iters=50, seed=0)
    result = minimize_width(PointSet((Vector((3.0, 4.0)),)), cfg)
    assert result.width == 0.0


def test_minimize_width_unit_square():
    cfg = OptimizerConfig(restarts=16, seed=5)
    result = minimize_width(unit_square(), cfg)
    assert abs(result.width - 1.0) <= 1e-6


def test_sum_zero_constraint_changes_the_answer():
    # the simplex lives on an affine hyperplane; unconstrained search
    # finds its normal and a width of zero
    points = standard_simplex_vertices(3)
    free = minimize_width(points, OptimizerConfig(restarts=8, seed=2))
    assert free.width <= 1e-3
    constrained = minimize_width(
        points, OptimizerConfig(restarts=8, seed=2, constrain_sum_zero=True)
    )
    assert abs(constrained.width - 1.0) <= 1e-9


def test_sum_zero_needs_two_dimensions():
    with pytest.raises(DimensionError):
        minimize_width(
            PointSet((Vector((1.0,)),)),
            OptimizerConfig(restarts=2, constrain_sum_zero=True),
        )


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_minimizer_lands_in_optimal_family(n):
    points = standard_simplex_vertices(n)
    cfg = OptimizerConfig(restarts=32, seed=17, constrain_sum_zero=True)
    result = minimize_width(points, cfg)
    target = math.sqrt(width_squared(n, SimplexKind.STANDARD))
    assert abs(result.width - target) <= 1e-9 * max(1.0, target)
    assert is_optimal_direction(n, result.direction)
    # the reported width must be the projection width of the reported direction
    recomputed = projection_width(result.direction, points)
    assert abs(result.width - recomputed) <= 1e-12 * max(1.0, recomputed)


def test_grid_requires_coarse_limits():
    with pytest.raises(ValueError):
        grid_width_oracle(unit_square(), 7)
    five_d = PointSet((Vector((1.0, 0.0, 0.0, 0.0, 0.0)),))
    with pytest.raises(ValueError):
        grid_width_oracle(five_d, 100)
    with pytest.raises(DimensionError):
        grid_width_oracle(PointSet((Vector((1.0,)),)), 100, constrain_sum_zero=True)


def test_grid_dimension_one_is_the_antipodes():
    points = PointSet((Vector((1.0,)), Vector((4.0,))))
    result = grid_width_oracle(points, 8)
    assert result.width == 3.0
    assert result.iterations == 2
    assert result.method is Method.GRID


def test_grid_circle_counts_and_square_width():
    result = grid_width_oracle(unit_square(), 10_000)
    assert result.iterations == 10_000
    assert abs(result.width - 1.0) <= 1e-3


def test_grid_chunking_is_seamless():
    chunks = list(grid_directions(2, 1000, chunk_rows=128))
    assert sum(len(c) for c in chunks) == 1000
    stacked = np.vstack(chunks)
    whole = np.vstack(list(grid_directions(2, 1000)))
    assert np.array_equal(stacked, whole)


def test_grid_directions_are_unit():
    for chunk in grid_directions(4, 64, constrain_sum_zero=True):
        norms = np.linalg.norm(chunk, axis=1)
        assert np.max(np.abs(norms - 1.0)) <= 1e-12
        assert np.max(np.abs(chunk.sum(axis=1))) <= 1e-12


def test_grid_matches_closed_form_on_triangle():
    points = standard_simplex_vertices(2)
    result = grid_width_oracle(points, 10_000, constrain_sum_zero=True)
    target = math.sqrt(width_squared(2, SimplexKind.STANDARD))
    assert -1e-12 <= result.width - target <= 1e-3


def test_enumeration_is_exact():
    for n in range(1, 33):
        result = two_value_enumeration_width(n)
        assert result.width_squared_exact == width_squared(n, SimplexKind.STANDARD)
        assert result.width == math.sqrt(result.width_squared_exact)
        assert result.method is Method.ENUMERATION
        assert isinstance(result.width_squared_exact, Fraction)
        assert is_optimal_direction(n, result.direction)


def test_enumeration_validates_order():
    with pytest.raises(DimensionError):
        two_value_enumeration_width(0)
