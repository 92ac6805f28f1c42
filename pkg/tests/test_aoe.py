"""
Tests for the factorized basis, checked against the nine-point worked example
"""

import pytest

from escalier.aoe import (
    axis_of_evil, c_partition, expand, interpolate_factor, n_m_set, reduce_basis,
)
from escalier.errors import InconsistentInputError, ProjectionCollisionError
from escalier.instances import WORKED_EXAMPLE_GENERATORS
from escalier.monomials import degree
from escalier.poly import parse_polynomial


def bodies(element, m):
    return [f.body for f in element.factors_for(m)]


def test_basis_has_one_element_per_generator(worked_basis):
    assert worked_basis.leading_terms() == WORKED_EXAMPLE_GENERATORS


@pytest.mark.parametrize("tau", WORKED_EXAMPLE_GENERATORS)
def test_factor_count_matches_degree(worked_basis, tau):
    element = worked_basis.element(tau)
    assert len(element.factors) == degree(tau)
    for m in range(1, 4):
        assert len(element.factors_for(m)) == tau[m - 1]


@pytest.mark.parametrize("tau", WORKED_EXAMPLE_GENERATORS)
def test_products_vanish_with_expected_leading_term(worked_basis, worked_points, tau):
    element = worked_basis.element(tau)
    product = expand(element)
    assert product.leading_term() == tau
    assert product.leading_coeff() == 1
    assert all(product.evaluate(p) == 0 for p in worked_points)


def test_x1_power(worked_basis, poly):
    element = worked_basis.element((4, 0, 0))
    assert bodies(element, 1) == [poly("x1 - 4"), poly("x1 - 2"), poly("x1 - 3"), poly("x1 - 1")]
    assert element.b1 == (4, 2, 3, 1)
    assert [s.delta for s in element.steps] == [4, 3, 2, 1]
    assert element.variable_step(2) is None
    assert element.steps[-1].survivors == ()


def test_x1_squared_x2(worked_basis, poly):
    element = worked_basis.element((2, 1, 0))
    assert element.variable_step(1).n_m == ((0, 0, 0), (1, 0, 0))
    assert [s.interpolation for s in element.steps if s.m == 1] == [(2,), (8,)]
    assert element.step(1, 1).interpolation == (8,)
    assert element.b1 == (2, 1)

    assert element.variable_step(2).survivors == (0, 3)
    assert element.variable_step(2).n_m == (
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0), (1, 1, 0),
    )
    step = element.step(2, 1)
    assert step.candidates == (0, 1, 3, 5)
    assert step.interpolation == (0, 3)
    assert step.support == ((0, 0, 0), (1, 0, 0))
    assert step.survivors == ()
    assert bodies(element, 2) == [poly("x2")]


def test_x2_squared(worked_basis, poly):
    element = worked_basis.element((0, 2, 0))
    assert element.factors_for(1) == []
    assert element.variable_step(1).n_m == ()
    assert element.variable_step(2).survivors == tuple(range(9))

    first = element.step(2, 1)
    assert first.interpolation == (2, 8)
    assert first.support == ((0, 0, 0), (1, 0, 0))
    assert first.survivors == (0, 1, 3, 4, 5)

    second = element.step(2, 2)
    assert second.interpolation == (0, 1, 3, 5)
    assert second.support == ((0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0))
    assert second.survivors == ()

    assert bodies(element, 2) == [
        poly("x2 - 4*x1 + 4"),
        poly("x2 - 1/2*x1^2 + 7/2*x1 - 6"),
    ]


def test_x1_x3(worked_basis, poly):
    element = worked_basis.element((1, 0, 1))
    assert element.variable_step(1).n_m == ((0, 0, 0),)
    assert element.step(1, 1).interpolation == (4,)
    assert bodies(element, 1) == [poly("x1 - 2")]

    assert element.variable_step(2).n_m == ((0, 0, 0),)
    assert element.variable_step(2).survivors == (0, 3, 5, 8)
    assert element.factors_for(2) == []

    assert len(element.variable_step(3).n_m) == 7
    step = element.step(3, 1)
    assert step.interpolation == (0, 3, 5, 8)
    assert step.support == ((0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0))
    assert bodies(element, 3) == [poly("x3 - 2/3*x2 + 1/6*x1^2 - 1/6*x1 - 2")]


def test_x2_x3_squared(worked_basis, worked_points, poly):
    element = worked_basis.element((0, 1, 2))
    assert element.variable_step(2).n_m == ((0, 0, 0),)
    assert element.step(2, 1).interpolation == (7,)
    assert bodies(element, 2) == [poly("x2 - 4")]
    assert element.step(2, 1).survivors == (0, 1, 3, 4, 5, 8)

    assert len(element.variable_step(3).n_m) == 9
    assert element.step(3, 1).candidates == (4, 6)
    assert element.step(3, 1).interpolation == (4,)
    assert element.step(3, 1).survivors == (0, 1, 3, 5, 8)

    last = element.step(3, 2)
    assert last.interpolation == (0, 1, 3, 5, 8)
    assert last.support == ((0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0))
    factor = element.factors[-1]
    assert factor.body.leading_term() == (0, 0, 1)
    assert all(factor.body.evaluate(worked_points[i]) == 0 for i in last.interpolation)


def test_x3_cubed(worked_basis, poly):
    element = worked_basis.element((0, 0, 3))
    assert element.factors_for(1) == [] and element.factors_for(2) == []

    assert element.step(3, 1).interpolation == (7,)
    assert element.step(3, 1).survivors == (0, 1, 2, 3, 4, 5, 6)
    assert element.step(3, 2).interpolation == (4, 6)
    assert element.step(3, 2).support == ((0, 0, 0), (0, 1, 0))
    assert element.step(3, 2).survivors == (0, 1, 2, 3, 5)
    assert element.step(3, 3).interpolation == (0, 1, 2, 3, 5)
    assert element.step(3, 3).support == (
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0),
    )
    assert bodies(element, 3) == [
        poly("x3 - 2"),
        poly("x3 - 3"),
        poly("x3 + 4/3*x2 - 5/6*x1^3 + 35/6*x1^2 - 9*x1 - 4"),
    ]


def test_expanded_products(worked_basis, poly):
    expanded = dict(zip(worked_basis.leading_terms(), worked_basis.expanded()))
    assert expanded[(4, 0, 0)] == poly("x1^4 - 10*x1^3 + 35*x1^2 - 50*x1 + 24")
    assert expanded[(2, 1, 0)] == poly("x1^2*x2 - 3*x1*x2 + 2*x2")


def test_reduced_basis(worked_basis, poly):
    reduced = dict(zip(worked_basis.leading_terms(), worked_basis.reduced()))
    assert reduced[(0, 2, 0)] == poly(
        "x2^2 - 2*x1*x2 - x2 + 2*x1^3 - 16*x1^2 + 38*x1 - 24"
    )
    assert reduced[(1, 0, 1)] == poly(
        "x1*x3 - 2*x3 - 2/3*x1*x2 + 4/3*x2 + 1/6*x1^3 - 1/2*x1^2 - 5/3*x1 + 4"
    )


def test_reduce_basis_rejects_non_minimal(poly):
    with pytest.raises(InconsistentInputError):
        reduce_basis([poly("x1"), poly("x1*x2")])


def test_render_factored_element(worked_basis):
    assert worked_basis.element((2, 1, 0)).render() == "(x1 - 2)(x1 - 1)(x2)"


def test_single_point():
    basis = axis_of_evil([(3, 5)])
    assert basis.leading_terms() == [(1, 0), (0, 1)]
    assert [str(p) for p in basis.expanded()] == ["x1 - 3", "x2 - 5"]


def test_parallel_matches_sequential(worked_points, worked_basis):
    parallel = axis_of_evil(worked_points, parallel=True, max_workers=3)
    assert parallel.expanded() == worked_basis.expanded()


def test_supplied_generators_are_checked(worked_points, worked_escalier):
    with pytest.raises(InconsistentInputError):
        axis_of_evil(worked_points, worked_escalier, [(4, 0, 0)])


def test_unvalidated_inputs_are_trusted(worked_points, worked_escalier):
    basis = axis_of_evil(
        worked_points, worked_escalier, WORKED_EXAMPLE_GENERATORS, validate=False,
    )
    assert basis.leading_terms() == WORKED_EXAMPLE_GENERATORS


def test_n_m_set_rejects_escalier_terms(worked_escalier):
    with pytest.raises(InconsistentInputError):
        n_m_set((1, 0, 0), worked_escalier.term_set(), 1)


def test_c_partition(worked_escalier):
    parts = c_partition((1, 0, 1), worked_escalier.term_set(), 3)
    assert parts[0] == [(0, 0, 1)]
    assert parts[1] == [
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0), (0, 1, 0), (1, 1, 0),
    ]


def test_interpolate_factor():
    factor = interpolate_factor([(0, 5), (1, 7)], 2, 2)
    assert factor.body == parse_polynomial("x2 - 2*x1 - 5", 2)
    assert factor.support == ((0, 0), (1, 0))


def test_interpolate_factor_without_points():
    factor = interpolate_factor([], 2, 3)
    assert factor.body == parse_polynomial("x2", 3)


def test_interpolate_factor_rejects_collisions():
    with pytest.raises(ProjectionCollisionError):
        interpolate_factor([(1, 2, 3), (1, 2, 4)], 2, 3)
