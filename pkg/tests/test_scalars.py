"""
Tests for exact field arithmetic
"""

from fractions import Fraction

import pytest

from escalier.errors import ConfigError, FieldMismatchError, ScalarParseError
from escalier.scalars import (
    QQ, PrimeFieldElement, add, div, field_from_name, field_of, infer_field,
    mul, parse_scalar, prime_field, render_scalar, sub,
)


def test_rational_addition():
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_zero_is_additive_identity():
    x = Fraction(7, 3)
    assert add(Fraction(0), x) == x


def test_prime_field_product():
    f5 = prime_field(5)
    assert mul(f5(3), f5(4)) == 2


def test_rational_division():
    assert div(Fraction(-1, 2), Fraction(2)) == Fraction(-1, 4)


def test_self_division_is_one():
    a = Fraction(-9, 4)
    assert div(a, a) == 1


def test_prime_field_division():
    f7 = prime_field(7)
    assert div(f7(3), f7(5)) == 2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        div(Fraction(1), Fraction(0))
    with pytest.raises(ZeroDivisionError):
        prime_field(7)(3) / prime_field(7)(0)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        add(Fraction(1, 2), prime_field(7)(1))
    with pytest.raises(FieldMismatchError):
        prime_field(5)(1) + prime_field(7)(1)


def test_sub_in_prime_field_wraps():
    f5 = prime_field(5)
    assert sub(f5(1), f5(3)) == 3


@pytest.mark.parametrize("text,expected", [
    ("4", Fraction(4)),
    ("-6/4", Fraction(-3, 2)),
    (" 10 / 5 ", Fraction(2)),
    ("+3", Fraction(3)),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["1/0", "", "abc", "1.5", "2/-3", "1/2/3"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


def test_parse_in_prime_field():
    f7 = prime_field(7)
    assert parse_scalar("1/2", f7) == 4
    assert parse_scalar("-1", f7) == 6
    with pytest.raises(ScalarParseError):
        parse_scalar("1/7", f7)


def test_render_scalar():
    assert render_scalar(Fraction(-6, 4)) == "-3/2"
    assert render_scalar(Fraction(5)) == "5"
    assert render_scalar(prime_field(11)(-1)) == "10"


def test_field_names():
    assert field_from_name("q") is QQ
    assert field_from_name("fp:13") == prime_field(13)
    assert prime_field(13).name == "fp:13"
    with pytest.raises(ConfigError):
        field_from_name("fp:12")
    with pytest.raises(ConfigError):
        field_from_name("reals")


def test_field_inference():
    assert field_of(3) is QQ
    assert field_of(prime_field(5)(2)) == prime_field(5)
    assert infer_field([(prime_field(3)(1), prime_field(3)(2))]) == prime_field(3)
    assert infer_field([]) is QQ
    with pytest.raises(FieldMismatchError):
        field_of(0.5)


def test_prime_field_element_hash_and_equality():
    a = PrimeFieldElement(8, 5)
    b = PrimeFieldElement(3, 5)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_prime_field_element_matches_its_residue():
    f5 = prime_field(5)
    assert f5(3) == 3
    assert hash(f5(3)) == hash(3)
    assert f5(3) != 8
    assert f5(4) != -1
    assert len({f5(3), 3}) == 1


def test_rational_field_rejects_floats():
    with pytest.raises(FieldMismatchError):
        QQ(0.5)
