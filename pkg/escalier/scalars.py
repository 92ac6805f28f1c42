"""
Exact field arithmetic for coordinates and coefficients

The rationals are represented by ``fractions.Fraction`` (always in lowest
terms with a positive denominator). Prime fields use ``PrimeFieldElement``,
a canonical residue in ``0..p-1``. Floats are rejected everywhere: the
Cerlienco-Mureddu recursion branches on exact coordinate equality.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Sequence, Tuple, Union

from sympy import isprime

from .errors import ConfigError, FieldMismatchError, ScalarParseError


SCALAR_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


class PrimeFieldElement:
    """Residue class modulo a prime p, stored as its representative in 0..p-1"""

    __slots__ = ('value', 'p')

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine F_{self.p} with F_{other.p}")
            return other.value
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, float)):
            raise FieldMismatchError(f"cannot combine F_{self.p} with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> 'PrimeFieldElement':
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * PrimeFieldElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v, self.p) * self.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"F{self.p}({self.value})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, PrimeFieldElement]


class Field:
    """Common interface of the coefficient fields"""

    name = "field"

    def __call__(self, value: Any) -> Scalar:
        raise NotImplementedError()

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, value: Any) -> bool:
        raise NotImplementedError()

    def parse(self, text: str) -> Scalar:
        match = SCALAR_PATTERN.match(text) if isinstance(text, str) else None
        if match is None:
            raise ScalarParseError(f"malformed scalar: {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return self._from_ratio(numerator, denominator, text)

    def _from_ratio(self, numerator: int, denominator: int, text: str) -> Scalar:
        raise NotImplementedError()

    def render(self, value: Scalar) -> str:
        return str(self(value))


class RationalField(Field):
    """The field Q of arbitrary-precision rationals"""

    name = "q"

    def __call__(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool) or isinstance(value, int):
            return Fraction(int(value))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, PrimeFieldElement):
            raise FieldMismatchError(f"cannot move F_{value.p} element into Q")
        raise FieldMismatchError(f"not an exact rational: {value!r}")

    def contains(self, value: Any) -> bool:
        return isinstance(value, (Fraction, int)) and not isinstance(value, bool)

    def _from_ratio(self, numerator: int, denominator: int, text: str) -> Fraction:
        return Fraction(numerator, denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The prime field F_p"""

    def __init__(self, p: int):
        if not isinstance(p, int) or not isprime(p):
            raise ConfigError(f"F_p requires a prime modulus, got {p!r}")
        self.p = p

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    def __call__(self, value: Any) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise FieldMismatchError(f"cannot move F_{value.p} element into F_{self.p}")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElement(value, self.p)
        if isinstance(value, Fraction):
            return self._from_ratio(value.numerator, value.denominator, str(value))
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatchError(f"not an element of F_{self.p}: {value!r}")

    def contains(self, value: Any) -> bool:
        return isinstance(value, PrimeFieldElement) and value.p == self.p

    def _from_ratio(self, numerator: int, denominator: int, text: str) -> PrimeFieldElement:
        if denominator % self.p == 0:
            raise ScalarParseError(f"denominator of {text!r} vanishes in F_{self.p}")
        return PrimeFieldElement(numerator, self.p) / PrimeFieldElement(denominator, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=64)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Resolve ``q`` or ``fp:<p>`` to a field object"""
    text = (name or "q").strip().lower()
    if text in ("q", "qq", "rational", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ConfigError(f"invalid prime in field spec: {name!r}")
        return prime_field(p)
    raise ConfigError(f"unknown field: {name!r} (expected q or fp:<p>)")


def field_of(value: Any) -> Field:
    """The field a scalar lives in (plain ints count as rationals)"""
    if isinstance(value, PrimeFieldElement):
        return prime_field(value.p)
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return QQ
    raise FieldMismatchError(f"not an exact scalar: {value!r}")


def infer_field(points: Iterable[Sequence[Any]]) -> Field:
    for point in points:
        for coordinate in point:
            return field_of(coordinate)
    return QQ


def coerce_point(point: Sequence[Any], field: Field) -> Tuple[Scalar, ...]:
    return tuple(field(c) for c in point)


def _same_field(a: Scalar, b: Scalar):
    fa, fb = field_of(a), field_of(b)
    if fa != fb:
        raise FieldMismatchError(f"field mismatch: {fa!r} vs {fb!r}")


def add(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    if not b:
        raise ZeroDivisionError("division by zero")
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def parse_scalar(text: str, field: Field = QQ) -> Scalar:
    """Parse ``"4"``, ``"-6/4"`` (reduced to -3/2) and the like"""
    return field.parse(text)


def render_scalar(value: Scalar) -> str:
    if isinstance(value, PrimeFieldElement):
        return str(value.value)
    return str(Fraction(value))
