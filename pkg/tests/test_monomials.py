"""
Tests for terms and the lex order
"""

from math import comb

import pytest

from escalier.errors import DimensionMismatchError, NotAnOrderIdealError
from escalier.monomials import (
    EQ, GT, LT, border, divides, is_order_ideal, lcm, lex_cmp, lex_sorted,
    minimal_generators_bruteforce, parse_term, predecessors, render_term,
    require_order_ideal, slice_by_degree, terms_of_degree, truncate, variable,
)


def test_lex_compares_highest_variable_first():
    assert lex_cmp((1, 0, 0), (0, 1, 0)) == LT
    assert lex_cmp((5, 0, 0), (0, 0, 1)) == LT
    assert lex_cmp((0, 2, 1), (9, 1, 1)) == GT
    assert lex_cmp((1, 2, 3), (1, 2, 3)) == EQ


def test_lex_sorted_ascending():
    terms = [(0, 0, 1), (3, 0, 0), (0, 1, 0), (0, 0, 0), (1, 1, 0)]
    assert lex_sorted(terms) == [(0, 0, 0), (3, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    assert lex_sorted(terms, descending=True)[0] == (0, 0, 1)


def test_lex_cmp_rejects_different_lengths():
    with pytest.raises(DimensionMismatchError):
        lex_cmp((1, 0), (1, 0, 0))


def test_predecessors():
    assert predecessors((2, 1, 0)) == {(1, 1, 0), (2, 0, 0)}
    assert predecessors((0, 0, 0)) == set()


def test_divisibility_and_lcm():
    assert divides((1, 0, 1), (2, 1, 1))
    assert not divides((0, 2, 0), (2, 1, 1))
    assert lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)


def test_variable_and_truncate():
    assert variable(2, 3) == (0, 1, 0)
    assert truncate((2, 1, 3), 1) == (2, 0, 0)
    with pytest.raises(DimensionMismatchError):
        variable(4, 3)


@pytest.mark.parametrize("terms,expected", [
    ([(0, 0)], True),
    ([(0, 0), (1, 0), (0, 1), (1, 1)], True),
    ([(0, 0), (1, 1)], False),
    ([(0, 0), (2, 0)], False),
    ([], True),
])
def test_is_order_ideal(terms, expected):
    assert is_order_ideal(terms) is expected


def test_require_order_ideal_names_missing_divisor():
    with pytest.raises(NotAnOrderIdealError, match="x1"):
        require_order_ideal([(0, 0), (1, 1), (0, 1)])


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 9))
def test_terms_of_degree_counts(n, d):
    terms = terms_of_degree(n, d)
    assert len(terms) == comb(n + d - 1, n - 1)
    assert len(set(terms)) == len(terms)
    assert terms == lex_sorted(terms)


def test_slice_by_degree():
    slices = slice_by_degree([(0, 0), (1, 0), (0, 1), (2, 0)])
    assert slices == {0: [(0, 0)], 1: [(1, 0), (0, 1)], 2: [(2, 0)]}


def test_bruteforce_generators_of_one():
    assert minimal_generators_bruteforce([(0, 0)], 2) == [(1, 0), (0, 1)]


def test_bruteforce_generators_of_staircase():
    ideal = [(0, 0), (1, 0), (2, 0), (0, 1)]
    assert minimal_generators_bruteforce(ideal, 2) == [(3, 0), (1, 1), (0, 2)]


def test_bruteforce_generators_of_empty_ideal():
    assert minimal_generators_bruteforce([], 2) == [(0, 0)]


def test_border():
    assert border([(0, 0), (1, 0)], 2) == [(2, 0), (0, 1), (1, 1)]


@pytest.mark.parametrize("t,text", [
    ((0, 0, 0), "1"),
    ((1, 0, 0), "x1"),
    ((2, 1, 0), "x1^2*x2"),
    ((0, 1, 2), "x2*x3^2"),
])
def test_render_term(t, text):
    assert render_term(t) == text
    assert parse_term(text, 3) == t


def test_parse_term_rejects_garbage():
    with pytest.raises(ValueError):
        parse_term("y^2", 2)
    with pytest.raises(DimensionMismatchError):
        parse_term("x3", 2)
