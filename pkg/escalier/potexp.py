"""
Minimal monomial basis from a finite escalier by potential expansion

The escalier is sliced by degree. Walking the degrees upward, the terms of
degree i split into three disjoint groups: escalier terms N_i, multiples of
lower-degree generators C[i], and the new generators Gen_i. A binomial count
tells when Gen_i is empty; otherwise it is the complement of N_i and C[i]
in the full degree-i slice.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterable, List, Union

from .cemu import Escalier
from .errors import DimensionMismatchError, MixedDegreeError
from .monomials import (
    Term, degree, lex_key, lex_sorted, multiply, predecessors,
    require_order_ideal, slice_by_degree, terms_of_degree, variable,
)

logger = logging.getLogger(__name__)


@dataclass
class DegreeSlicedIdealView:
    """Per-degree bookkeeping of one run of the expansion"""
    n: int
    max_degree: int
    slices: Dict[int, List[Term]] = field(default_factory=dict)
    expansions: Dict[int, List[Term]] = field(default_factory=dict)
    generators: Dict[int, List[Term]] = field(default_factory=dict)

    def generator_list(self) -> List[Term]:
        result: List[Term] = []
        for d in sorted(self.generators):
            result.extend(self.generators[d])
        return lex_sorted(result)


def potential_expansion_step(terms: Iterable[Term], n: int) -> List[Term]:
    """
    Degree-(j+1) terms all of whose predecessors lie in ``terms``

    All input terms must share the same degree j. Result is lex ascending.
    """
    term_set = set(terms)
    degrees = {degree(t) for t in term_set}
    if len(degrees) > 1:
        raise MixedDegreeError(f"expansion input mixes degrees {sorted(degrees)}")
    candidates = set()
    for t in term_set:
        if len(t) != n:
            raise DimensionMismatchError(f"term {t} does not have {n} exponents")
        for i in range(1, n + 1):
            candidates.add(multiply(t, variable(i, n)))
    return lex_sorted(c for c in candidates if predecessors(c) <= term_set)


def complement_sorted(universe: List[Term], subset: List[Term]) -> List[Term]:
    """
    universe minus subset, both lex ascending with subset contained in universe

    Two-pointer walk: equal heads advance both, otherwise the universe head
    belongs to the complement.
    """
    result = []
    j = 0
    for a in universe:
        if j < len(subset) and subset[j] == a:
            j += 1
        else:
            result.append(a)
    if j != len(subset):
        raise ValueError("subset is not contained in the universe")
    return result


def merge_sorted(a: List[Term], b: List[Term]) -> List[Term]:
    """Union of two disjoint lex-ascending lists, kept ascending"""
    result = []
    i = j = 0
    while i < len(a) and j < len(b):
        if lex_key(a[i]) < lex_key(b[j]):
            result.append(a[i])
            i += 1
        else:
            result.append(b[j])
            j += 1
    result.extend(a[i:])
    result.extend(b[j:])
    return result


def degree_view(order_ideal: Union[Escalier, Iterable[Term]], n: int = None) -> DegreeSlicedIdealView:
    """Run the expansion and keep every intermediate slice"""
    if isinstance(order_ideal, Escalier):
        n = order_ideal.n if n is None else n
        terms = order_ideal.terms
    else:
        terms = list(order_ideal)
    term_set = require_order_ideal(terms)
    if n is None:
        if not term_set:
            raise DimensionMismatchError("cannot infer the variable count of an empty order ideal")
        n = len(next(iter(term_set)))
    for t in term_set:
        if len(t) != n:
            raise DimensionMismatchError(f"term {t} does not have {n} exponents")

    h = max((degree(t) for t in term_set), default=-1)
    slices = slice_by_degree(term_set)
    view = DegreeSlicedIdealView(n=n, max_degree=h)

    below: List[Term] = []
    for i in range(h + 2):
        n_i = slices.get(i, [])
        universe = terms_of_degree(n, i)
        if i == 0:
            c_i: List[Term] = []
        else:
            # degree-i terms with some predecessor outside the escalier
            c_i = complement_sorted(universe, potential_expansion_step(below, n) if below else [])
        occupied = merge_sorted(n_i, c_i)
        missing = comb(n + i - 1, n - 1) - len(occupied)
        if missing == 0:
            gen_i: List[Term] = []
        else:
            gen_i = complement_sorted(universe, occupied)
        view.slices[i] = n_i
        view.expansions[i] = c_i
        view.generators[i] = gen_i
        logger.debug(f"degree {i}: |N|={len(n_i)} |C|={len(c_i)} new generators={len(gen_i)}")
        below = n_i
    return view


def minimal_basis(order_ideal: Union[Escalier, Iterable[Term]], n: int = None) -> List[Term]:
    """
    Minimal generators of the monomial ideal whose complement is the escalier

    Output is lex ascending; no generator exceeds degree h+1.
    """
    return degree_view(order_ideal, n).generator_list()
