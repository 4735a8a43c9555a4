"""Shared helpers for the test suite: seeded random point-set corpora."""

import random

from waringcert import PointSet, ProjectivePoint


def random_points(n, size, rng, bound=9):
    """A random PointSet of `size` distinct points in P^n, coordinates in [-bound, bound]."""
    points = []
    seen = set()
    while len(points) < size:
        coords = tuple(rng.randint(-bound, bound) for _ in range(n + 1))
        if all(c == 0 for c in coords):
            continue
        point = ProjectivePoint(coords)
        if point in seen:
            continue
        seen.add(point)
        points.append(point)
    return PointSet(tuple(points))


def corpus(seed, count, dims, max_size, bound=9, min_size=1):
    """Deterministic list of `count` random point sets across the given dims."""
    rng = random.Random(seed)
    sets = []
    for _ in range(count):
        n = rng.choice(dims)
        size = rng.randint(min_size, max_size)
        sets.append(random_points(n, size, rng, bound=bound))
    return sets
