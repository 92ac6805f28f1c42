"""
Tests for the minimal basis of a finite escalier
"""

import numpy as np
import pytest

from escalier.instances import WORKED_EXAMPLE_GENERATORS, random_order_ideal
from escalier.monomials import minimal_generators_bruteforce
from escalier.potexp import (
    MixedDegreeError, complement_sorted, degree_view, merge_sorted,
    minimal_basis, potential_expansion_step,
)


def test_three_variable_staircase():
    ideal = [
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (0, 1, 1), (1, 0, 1), (2, 0, 0), (2, 0, 1),
    ]
    assert minimal_basis(ideal) == [(3, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 2)]


def test_worked_example(worked_escalier):
    assert minimal_basis(worked_escalier) == WORKED_EXAMPLE_GENERATORS


def test_single_term_ideal():
    assert minimal_basis([(0, 0)]) == [(1, 0), (0, 1)]


def test_empty_ideal_needs_dimension():
    assert minimal_basis([], n=2) == [(0, 0)]


def test_expansion_of_all_variables():
    assert potential_expansion_step([(1, 0), (0, 1)], 2) == [(2, 0), (1, 1), (0, 2)]


def test_expansion_of_one_variable():
    assert potential_expansion_step([(1, 0)], 2) == [(2, 0)]


def test_expansion_rejects_mixed_degrees():
    with pytest.raises(MixedDegreeError):
        potential_expansion_step([(1, 0), (1, 1)], 2)


def test_sorted_list_helpers():
    universe = [(2, 0), (1, 1), (0, 2)]
    assert complement_sorted(universe, [(1, 1)]) == [(2, 0), (0, 2)]
    assert merge_sorted([(2, 0)], [(1, 1), (0, 2)]) == universe
    with pytest.raises(ValueError):
        complement_sorted(universe, [(3, 0)])


def test_degree_view_slices(worked_escalier):
    view = degree_view(worked_escalier)
    assert view.max_degree == 3
    assert view.generators[0] == []
    assert view.generators[2] == [(0, 2, 0), (1, 0, 1)]
    assert view.generators[4] == [(4, 0, 0)]
    assert view.expansions[1] == []


@pytest.mark.parametrize("seed", range(25))
def test_matches_bruteforce_on_random_ideals(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 5))
    ideal = random_order_ideal(n, 5, rng)
    assert minimal_basis(ideal, n) == minimal_generators_bruteforce(ideal, n)
