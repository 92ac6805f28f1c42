"""
Shared fixtures: the nine-point worked example and small instance factories
"""

from fractions import Fraction

import numpy as np
import pytest

from escalier.aoe import axis_of_evil
from escalier.cemu import cemu
from escalier.instances import WORKED_EXAMPLE, random_point_set
from escalier.poly import parse_polynomial
from escalier.scalars import QQ


@pytest.fixture
def qq():
    return QQ


@pytest.fixture(scope="session")
def worked_points():
    return [tuple(Fraction(c) for c in p) for p in WORKED_EXAMPLE]


@pytest.fixture(scope="session")
def worked_escalier(worked_points):
    return cemu(worked_points)


@pytest.fixture(scope="session")
def worked_basis(worked_points):
    return axis_of_evil(worked_points)


@pytest.fixture
def poly():
    """parse_polynomial in three variables over Q"""
    def build(text, n=3, field=QQ):
        return parse_polynomial(text, n, field)
    return build


@pytest.fixture
def random_instances():
    def build(count, n, points, coord_range=5, seed=0):
        rng = np.random.default_rng(seed)
        return [random_point_set(n, points, coord_range, rng) for _ in range(count)]
    return build
