"""Seeded rational sample points.

Samples only ever refute (a point where something fails, re-checked
exactly) or feed advisory numeric stages; they never prove anything.
"""

import itertools
from fractions import Fraction

import numpy as np

from .MPoly import RationalPoint

default_grid = (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


def grid_points(variables, values=default_grid, limit=200):
    """Points of the small grid values^d, at most ``limit`` of them."""
    points = itertools.product(values, repeat=len(variables))
    return [
        RationalPoint(variables, coords)
        for coords in itertools.islice(points, limit)
    ]


def random_points(variables, count, seed=0, scale=2, denominator=8):
    """``count`` rational points with coordinates k/denominator drawn from a
    centered normal distribution of standard deviation ``scale``."""
    rng = np.random.default_rng(seed)
    raw = rng.normal(0, scale, size=(count, len(variables)))
    return [
        RationalPoint(
            variables,
            [Fraction(int(round(v * denominator)), denominator) for v in row],
        )
        for row in raw
    ]


def sample_points(variables, count, seed=0):
    """The grid first, then seeded random points, ``count`` in total."""
    points = grid_points(variables, limit=count)
    if len(points) < count:
        points += random_points(variables, count - len(points), seed=seed)
    return points


def points_in_set(generator_set, count, seed=0, strict=True, attempts=4000):
    """Up to ``count`` sample points where every scalar generator is
    positive (``strict``) or non-negative."""
    test = generator_set.strictly_inside if strict else generator_set.contains
    found = []
    candidates = grid_points(generator_set.vars) + random_points(
        generator_set.vars, attempts, seed=seed
    )
    for point in candidates:
        if test(point):
            found.append(point)
            if len(found) == count:
                break
    return found
