"""
Test instances: the nine-point worked example and random generators
"""

import logging
from typing import List, Optional, Set, Tuple

import numpy as np

from .errors import ConfigError
from .monomials import Term, lex_sorted, predecessors, variable, multiply, one

logger = logging.getLogger(__name__)


# Input order matters: the escalier assignment depends on it.
WORKED_EXAMPLE: List[Tuple[int, ...]] = [
    (4, 0, 0),
    (2, 1, 4),
    (2, 4, 0),
    (3, 0, 1),
    (2, 1, 3),
    (1, 3, 4),
    (2, 4, 3),
    (2, 4, 2),
    (1, 0, 2),
]

# Minimal generators of the worked example's leading-term ideal, lex ascending
WORKED_EXAMPLE_GENERATORS: List[Term] = [
    (4, 0, 0),
    (2, 1, 0),
    (0, 2, 0),
    (1, 0, 1),
    (0, 1, 2),
    (0, 0, 3),
]


def _rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def random_point_set(n: int, count: int, coord_range: int,
                     rng: Optional[object] = None) -> List[Tuple[int, ...]]:
    """
    ``count`` distinct integer points of dimension ``n`` with coordinates in
    0..coord_range-1, in the order they were drawn

    ``count`` is capped at coord_range ** n.
    """
    if n < 1:
        raise ConfigError(f"dimension must be positive, got {n}")
    if coord_range < 1:
        raise ConfigError(f"coordinate range must be positive, got {coord_range}")
    generator = _rng(rng)
    capacity = coord_range ** n
    target = max(0, min(count, capacity))
    if target < count:
        logger.warning(f"Only {capacity} distinct points exist; generating {target}")

    if target * 4 >= capacity:
        # dense request: sample codes without replacement
        codes = generator.choice(capacity, size=target, replace=False)
        points = []
        for code in codes:
            code = int(code)
            point = []
            for _ in range(n):
                point.append(code % coord_range)
                code //= coord_range
            points.append(tuple(point))
        return points

    seen: Set[Tuple[int, ...]] = set()
    points = []
    while len(points) < target:
        point = tuple(int(c) for c in generator.integers(0, coord_range, size=n))
        if point not in seen:
            seen.add(point)
            points.append(point)
    return points


def random_order_ideal(n: int, max_degree: int, rng: Optional[object] = None,
                       keep_probability: float = 0.6) -> List[Term]:
    """
    Random divisor-closed term set, grown degree by degree

    A term of the next degree is a candidate only when all of its
    predecessors were kept; each candidate is kept with ``keep_probability``.
    """
    generator = _rng(rng)
    kept: Set[Term] = {one(n)}
    frontier = [one(n)]
    for _ in range(max_degree):
        candidates = set()
        for t in frontier:
            for i in range(1, n + 1):
                candidate = multiply(t, variable(i, n))
                if predecessors(candidate) <= kept:
                    candidates.add(candidate)
        frontier = [c for c in lex_sorted(candidates) if generator.random() < keep_probability]
        if not frontier:
            break
        kept.update(frontier)
    return lex_sorted(kept)
