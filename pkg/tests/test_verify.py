"""
Tests for the independent checks: Moeller oracle, certificates, sympy cross-check
"""

from dataclasses import replace

import pytest
import sympy

from escalier.aoe import axis_of_evil, reduce_basis
from escalier.errors import DuplicatePointError
from escalier.poly import parse_polynomial
from escalier.scalars import prime_field
from escalier.verify import (
    certify_points, check_vanishing, elimination_check, gb_certificate,
    moeller_gb, selfcheck, spoly_check,
)


GOLDEN_REDUCED = [
    "x1^4 - 10*x1^3 + 35*x1^2 - 50*x1 + 24",
    "x1^2*x2 - 3*x1*x2 + 2*x2",
    "x2^2 - 2*x1*x2 - x2 + 2*x1^3 - 16*x1^2 + 38*x1 - 24",
    "x1*x3 - 2*x3 - 2/3*x1*x2 + 4/3*x2 + 1/6*x1^3 - 1/2*x1^2 - 5/3*x1 + 4",
]


def to_sympy(f, xs):
    total = sympy.Integer(0)
    for t, c in f.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(xs, t):
            term *= x ** e
        total += term
    return sympy.expand(total)


def test_moeller_single_point():
    result = moeller_gb([(3, 5)])
    assert result.escalier == [(0, 0)]
    assert result.reduced == [
        parse_polynomial("x1 - 3", 2),
        parse_polynomial("x2 - 5", 2),
    ]


def test_moeller_two_points():
    result = moeller_gb([(0, 0), (1, 0)])
    assert result.escalier == [(0, 0), (1, 0)]
    assert result.reduced == [
        parse_polynomial("x1^2 - x1", 2),
        parse_polynomial("x2", 2),
    ]


def test_moeller_rejects_duplicates():
    with pytest.raises(DuplicatePointError):
        moeller_gb([(1, 1), (1, 1)])


def test_moeller_worked_example(worked_points, worked_escalier, poly):
    result = moeller_gb(worked_points)
    assert set(result.escalier) == worked_escalier.term_set()
    for text in GOLDEN_REDUCED:
        assert poly(text) in result.reduced


def test_reduced_basis_matches_moeller(worked_points, worked_basis):
    assert worked_basis.reduced() == moeller_gb(worked_points).reduced


def test_certificate_of_worked_example(worked_points, worked_basis):
    certificate = gb_certificate(worked_basis, worked_points, spolys=True)
    assert certificate.valid
    assert certificate.problems() == []
    assert certificate.render().startswith("certificate: VALID")
    assert certificate.to_dict()["valid"] is True


def test_tampered_factor_is_caught(worked_points, worked_basis, poly):
    element = worked_basis.elements[0]
    bad = replace(element.factors[-1], body=poly("x1 - 5"))
    tampered = replace(
        worked_basis,
        elements=(replace(element, factors=element.factors[:-1] + (bad,)),) + worked_basis.elements[1:],
    )
    certificate = gb_certificate(tampered, worked_points)
    assert not certificate.valid
    assert certificate.vanishing.witness == (0, 5)
    assert "does not vanish at point 6 (value 24)" in certificate.problems()[0]
    assert certificate.to_dict()["witness"]["point"] == 6


def test_dropped_factor_changes_leading_terms(worked_points, worked_basis):
    element = worked_basis.elements[0]
    shortened = replace(
        worked_basis,
        elements=(replace(element, factors=element.factors[:-1]),) + worked_basis.elements[1:],
    )
    certificate = gb_certificate(shortened, worked_points)
    assert not certificate.terms_match
    assert not certificate.valid


def test_check_vanishing_records_values(poly):
    report = check_vanishing([poly("x1 - 1")], [(1, 0, 0), (3, 0, 0)])
    assert report.values == [[0, 2]]
    assert report.witness == (0, 1)
    assert not report.passed


def test_spoly_check(poly):
    assert not spoly_check([poly("x1*x2 - 1"), poly("x1")]).passed
    golden = [poly(text) for text in GOLDEN_REDUCED[:3]]
    assert spoly_check([golden[0], golden[1]]).passed


def test_spoly_check_of_full_basis(worked_basis):
    assert spoly_check(worked_basis.reduced()).passed


@pytest.mark.parametrize("j", [1, 2, 3])
def test_elimination(worked_points, worked_basis, j):
    assert elimination_check(worked_basis.reduced(), worked_points, j).passed


def test_elimination_on_x1(worked_points, worked_basis, poly):
    report = elimination_check(worked_basis.reduced(), worked_points, 1)
    assert report.restricted == [poly(GOLDEN_REDUCED[0])]


def test_sympy_agrees_on_worked_example(worked_basis):
    xs = sympy.symbols("x1:4")
    exprs = [to_sympy(f, xs) for f in worked_basis.reduced()]
    oracle = sympy.groebner(exprs, *reversed(xs), order="lex", domain="QQ")
    monic = {
        sympy.expand(sympy.Poly(g, *reversed(xs)).monic().as_expr())
        for g in oracle.exprs
    }
    assert monic == set(exprs)


def test_random_instances_match_moeller(random_instances):
    for points in random_instances(15, 3, 8):
        basis = axis_of_evil(points)
        assert reduce_basis(basis.expanded()) == moeller_gb(points).reduced


def test_prime_field_certificate():
    f7 = prime_field(7)
    points = [(f7(1), f7(2)), (f7(3), f7(2)), (f7(3), f7(6)), (f7(0), f7(0))]
    certificate = certify_points(points, field=f7)
    assert certificate.valid


def test_selfcheck_small_sweep():
    report = selfcheck(6, seed=3, max_n=3, max_points=8, coord_range=4)
    assert report.passed, report.render()
    assert report.render().startswith("selfcheck: 6 instance(s), seed 3: ok")
