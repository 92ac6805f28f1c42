"""
Terms (exponent vectors) under the lexicographic order x1 < x2 < ... < xn

A term is a plain tuple of naturals. Comparison starts at the LAST
variable: a < b iff the highest index where they differ has a_j < b_j.
"""

import re
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .errors import DimensionMismatchError, NotAnOrderIdealError

Term = Tuple[int, ...]

LT, EQ, GT = -1, 0, 1

TERM_FACTOR = re.compile(r'^x(\d+)(?:\^(\d+))?$')


def lex_key(t: Term) -> Term:
    """Sort key realising the lex order (highest variable most significant)"""
    return tuple(reversed(t))


def lex_cmp(a: Term, b: Term) -> int:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare terms of length {len(a)} and {len(b)}")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return LT if x < y else GT
    return EQ


def lex_sorted(terms: Iterable[Term], descending: bool = False) -> List[Term]:
    return sorted(terms, key=lex_key, reverse=descending)


def one(n: int) -> Term:
    return (0,) * n


def variable(i: int, n: int) -> Term:
    """The term x_i (1-based index)"""
    if not 1 <= i <= n:
        raise DimensionMismatchError(f"variable x{i} outside 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def degree(t: Term) -> int:
    return sum(t)


def multiply(a: Term, b: Term) -> Term:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot multiply terms of length {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Term, b: Term) -> bool:
    """True iff a | b"""
    return all(x <= y for x, y in zip(a, b))


def divide(b: Term, a: Term) -> Term:
    """b / a, assuming a | b"""
    return tuple(y - x for x, y in zip(a, b))


def lcm(a: Term, b: Term) -> Term:
    return tuple(max(x, y) for x, y in zip(a, b))


def in_t_m(t: Term, m: int) -> bool:
    """Membership in T[m]: no variable above x_m occurs"""
    return not any(t[m:])


def truncate(t: Term, m: int) -> Term:
    """pi_m on terms, kept in the ambient length (exponents above m zeroed)"""
    return tuple(t[:m]) + (0,) * (len(t) - m)


def predecessors(t: Term) -> Set[Term]:
    """{ t / x_j : x_j | t }"""
    result = set()
    for j, e in enumerate(t):
        if e > 0:
            result.add(t[:j] + (e - 1,) + t[j + 1:])
    return result


def is_order_ideal(terms: Iterable[Term]) -> bool:
    """Closed under predecessors (equivalently under divisors)"""
    term_set = set(terms)
    return all(predecessors(t) <= term_set for t in term_set)


def require_order_ideal(terms: Iterable[Term]) -> Set[Term]:
    term_set = set(terms)
    for t in term_set:
        missing = predecessors(t) - term_set
        if missing:
            raise NotAnOrderIdealError(
                f"{render_term(t)} is present but its divisor "
                f"{render_term(lex_sorted(missing)[0])} is not"
            )
    return term_set


def terms_of_degree(n: int, d: int) -> List[Term]:
    """All terms of total degree d in n variables, lex ascending"""
    if n < 1 or d < 0:
        raise DimensionMismatchError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    terms = []
    for combo in combinations_with_replacement(range(n), d):
        exponents = [0] * n
        for i in combo:
            exponents[i] += 1
        terms.append(tuple(exponents))
    return lex_sorted(terms)


def slice_by_degree(terms: Iterable[Term]) -> Dict[int, List[Term]]:
    slices: Dict[int, List[Term]] = {}
    for t in terms:
        slices.setdefault(degree(t), []).append(t)
    return {d: lex_sorted(ts) for d, ts in slices.items()}


def minimal_generators_bruteforce(order_ideal: Iterable[Term], n: int) -> List[Term]:
    """
    Minimal generators of the complement of a finite order ideal

    Enumerates every term of degree <= h+1 and keeps those outside N whose
    predecessors all lie in N.
    """
    term_set = require_order_ideal(order_ideal)
    for t in term_set:
        if len(t) != n:
            raise DimensionMismatchError(f"term {t} does not have {n} exponents")
    h = max((degree(t) for t in term_set), default=-1)
    generators = []
    for d in range(h + 2):
        for t in terms_of_degree(n, d):
            if t not in term_set and predecessors(t) <= term_set:
                generators.append(t)
    return lex_sorted(generators)


def border(order_ideal: Iterable[Term], n: int) -> List[Term]:
    """{x_h * t : t in N} minus N"""
    term_set = set(order_ideal)
    result = set()
    for t in term_set:
        for i in range(1, n + 1):
            s = multiply(t, variable(i, n))
            if s not in term_set:
                result.add(s)
    return lex_sorted(result)


def render_term(t: Term) -> str:
    """x1^2*x2 style, "1" for the empty product"""
    factors = []
    for i, e in enumerate(t, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


def parse_term(text: str, n: int) -> Term:
    exponents = [0] * n
    text = text.strip()
    if text == "1":
        return tuple(exponents)
    for factor in text.split("*"):
        match = TERM_FACTOR.match(factor.strip())
        if match is None:
            raise ValueError(f"malformed term factor: {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise DimensionMismatchError(f"variable x{i} outside 1..{n}")
        exponents[i - 1] += int(match.group(2) or 1)
    return tuple(exponents)


def check_length(terms: Sequence[Term], n: int):
    for t in terms:
        if len(t) != n:
            raise DimensionMismatchError(f"term {t} does not have {n} exponents")
