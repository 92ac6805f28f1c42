"""
Sparse multivariate polynomials over an exact field
"""

import re
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, FieldMismatchError
from .monomials import (
    Term, divide, divides, lcm, lex_key, lex_sorted, multiply, one,
    parse_term, render_term, variable,
)
from .scalars import QQ, Field, Scalar, render_scalar


class Polynomial:
    """
    Immutable map term -> nonzero coefficient

    Every instance knows its ambient variable count and field; mixing
    either raises.
    """

    __slots__ = ('n', 'field', '_coeffs', '_hash')

    def __init__(self, n: int, field: Field = QQ, coeffs: Optional[Mapping[Term, Any]] = None):
        self.n = n
        self.field = field
        cleaned: Dict[Term, Scalar] = {}
        for t, c in (coeffs or {}).items():
            if len(t) != n:
                raise DimensionMismatchError(f"term {t} does not have {n} exponents")
            c = field(c)
            if c:
                cleaned[tuple(t)] = c
        self._coeffs = cleaned
        self._hash = None

    @classmethod
    def _raw(cls, n: int, field: Field, coeffs: Dict[Term, Scalar]) -> 'Polynomial':
        poly = cls.__new__(cls)
        poly.n = n
        poly.field = field
        poly._coeffs = {t: c for t, c in coeffs.items() if c}
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> 'Polynomial':
        return cls._raw(n, field, {})

    @classmethod
    def constant(cls, value: Any, n: int, field: Field = QQ) -> 'Polynomial':
        return cls(n, field, {one(n): value})

    @classmethod
    def monomial(cls, t: Term, coefficient: Any = 1, field: Field = QQ) -> 'Polynomial':
        return cls(len(t), field, {t: coefficient})

    @classmethod
    def var(cls, i: int, n: int, field: Field = QQ) -> 'Polynomial':
        return cls(n, field, {variable(i, n): 1})

    # ---- views ----

    @property
    def coeffs(self) -> Dict[Term, Scalar]:
        return dict(self._coeffs)

    def coefficient(self, t: Term) -> Scalar:
        return self._coeffs.get(tuple(t), self.field.zero)

    def support(self) -> List[Term]:
        """Terms in lex-descending order"""
        return lex_sorted(self._coeffs, descending=True)

    def items(self) -> List[Tuple[Term, Scalar]]:
        return [(t, self._coeffs[t]) for t in self.support()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def leading_term(self) -> Term:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._coeffs, key=lex_key)

    def leading_coeff(self) -> Scalar:
        return self._coeffs[self.leading_term()]

    def tail(self) -> 'Polynomial':
        lt = self.leading_term()
        return Polynomial._raw(self.n, self.field, {t: c for t, c in self._coeffs.items() if t != lt})

    def monic(self) -> 'Polynomial':
        return self.scale(self.field.one / self.leading_coeff())

    def degree_in(self, m: int) -> int:
        return max((t[m - 1] for t in self._coeffs), default=-1)

    def total_degree(self) -> int:
        return max((sum(t) for t in self._coeffs), default=-1)

    # ---- arithmetic ----

    def _check(self, other: 'Polynomial'):
        if self.n != other.n:
            raise DimensionMismatchError(f"polynomials in {self.n} and {other.n} variables")
        if self.field != other.field:
            raise FieldMismatchError(f"polynomials over {self.field!r} and {other.field!r}")

    def _lift(self, other: Any) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.n, self.field)

    def __add__(self, other):
        other = self._lift(other)
        result = dict(self._coeffs)
        zero = self.field.zero
        for t, c in other._coeffs.items():
            result[t] = result.get(t, zero) + c
        return Polynomial._raw(self.n, self.field, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, self.field, {t: -c for t, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        result: Dict[Term, Scalar] = {}
        zero = self.field.zero
        for t1, c1 in self._coeffs.items():
            for t2, c2 in other._coeffs.items():
                t = multiply(t1, t2)
                result[t] = result.get(t, zero) + c1 * c2
        return Polynomial._raw(self.n, self.field, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = Polynomial.constant(1, self.n, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> 'Polynomial':
        factor = self.field(factor)
        return Polynomial._raw(self.n, self.field, {t: c * factor for t, c in self._coeffs.items()})

    def mul_term(self, t: Term, factor: Any) -> 'Polynomial':
        """factor * t * self"""
        factor = self.field(factor)
        return Polynomial._raw(
            self.n, self.field,
            {multiply(s, t): c * factor for s, c in self._coeffs.items()},
        )

    def evaluate(self, point: Sequence[Any]) -> Scalar:
        if len(point) != self.n:
            raise DimensionMismatchError(f"point of dimension {len(point)} for {self.n} variables")
        values = [self.field(c) for c in point]
        total = self.field.zero
        for t, c in self._coeffs.items():
            term_value = c
            for v, e in zip(values, t):
                if e:
                    term_value = term_value * v ** e
            total = total + term_value
        return total

    # ---- comparison ----

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self._coeffs == other._coeffs
        if not self._coeffs:
            return other == 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._coeffs.items())))
        return self._hash

    # ---- rendering ----

    def render(self) -> str:
        """Text form, terms lex-descending, coefficients as reduced fractions"""
        if not self._coeffs:
            return "0"
        pieces: List[str] = []
        for t, c in self.items():
            text = render_scalar(c)
            negative = text.startswith("-")
            magnitude = text[1:] if negative else text
            if t == one(self.n):
                body = magnitude
            elif magnitude == "1":
                body = render_term(t)
            else:
                body = f"{magnitude}*{render_term(t)}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r}, n={self.n})"

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"exponents": list(t), "coefficient": render_scalar(c)}
            for t, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]], n: int, field: Field = QQ) -> 'Polynomial':
        coeffs: Dict[Term, Scalar] = {}
        for entry in data:
            t = tuple(int(e) for e in entry["exponents"])
            if t in coeffs:
                raise ValueError(f"repeated term {render_term(t)} in polynomial JSON")
            coeffs[t] = field.parse(str(entry["coefficient"]))
        return cls(n, field, coeffs)


MONOMIAL_TEXT = re.compile(r'([+-])?\s*([^+-]+)')


def parse_polynomial(text: str, n: int, field: Field = QQ) -> Polynomial:
    """Inverse of ``Polynomial.render``"""
    stripped = text.strip()
    if stripped == "0":
        return Polynomial.zero(n, field)
    result = Polynomial.zero(n, field)
    position = 0
    for match in MONOMIAL_TEXT.finditer(stripped):
        if stripped[position:match.start()].strip():
            raise ValueError(f"cannot parse polynomial: {text!r}")
        position = match.end()
        sign = -1 if match.group(1) == "-" else 1
        factors = [piece.strip() for piece in match.group(2).strip().split("*")]
        coefficient = field(sign)
        term_parts = []
        for piece in factors:
            if piece and (piece[0].isdigit()):
                coefficient = coefficient * field.parse(piece)
            else:
                term_parts.append(piece)
        t = parse_term("*".join(term_parts), n) if term_parts else one(n)
        result = result + Polynomial(n, field, {t: coefficient})
    return result


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials"""
    lt_f, lt_g = f.leading_term(), g.leading_term()
    m = lcm(lt_f, lt_g)
    return (f.mul_term(divide(m, lt_f), f.field.one / f.leading_coeff())
            - g.mul_term(divide(m, lt_g), g.field.one / g.leading_coeff()))


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """
    Remainder of f on division by ``basis``

    The lex-largest remaining term is treated first; when several basis
    elements can reduce it, the one with the lex-smallest leading term wins.
    """
    reducers = []
    for b in basis:
        f._check(b)
        if b.is_zero():
            raise ValueError("cannot reduce by the zero polynomial")
        reducers.append((b.leading_term(), b.leading_coeff(), b))
    reducers.sort(key=lambda item: lex_key(item[0]))

    zero = f.field.zero
    work: Dict[Term, Scalar] = dict(f._coeffs)
    remainder: Dict[Term, Scalar] = {}
    while work:
        lt = max(work, key=lex_key)
        lc = work[lt]
        for b_lt, b_lc, b in reducers:
            if divides(b_lt, lt):
                shift = divide(lt, b_lt)
                factor = lc / b_lc
                for t, c in b._coeffs.items():
                    s = multiply(t, shift)
                    value = work.get(s, zero) - factor * c
                    if value:
                        work[s] = value
                    else:
                        work.pop(s, None)
                break
        else:
            remainder[lt] = lc
            del work[lt]
    return Polynomial._raw(f.n, f.field, remainder)


def product(factors: Iterable[Polynomial], n: int, field: Field = QQ) -> Polynomial:
    result = Polynomial.constant(1, n, field)
    for f in factors:
        result = result * f
    return result
