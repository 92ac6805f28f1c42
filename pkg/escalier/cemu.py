"""
Cerlienco-Mureddu correspondence

Maps an ordered list of distinct points to the lex Groebner escalier of
their vanishing ideal, one term per point. The map is built point by point
and is stable under prefixes: the first m terms only depend on the first m
points.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from .errors import DimensionMismatchError, DuplicatePointError, InconsistentInputError
from .monomials import Term, lex_sorted, render_term
from .scalars import Field, Scalar, coerce_point, infer_field

logger = logging.getLogger(__name__)

Point = Tuple[Scalar, ...]


@dataclass(frozen=True)
class TraceStep:
    """How one point received its term"""
    index: int                      # 1-based position of the point
    point: Point
    sigma: int
    antecedent: Optional[int]       # 1-based index of the sigma-antecedent
    witness: Optional[Tuple[Point, ...]]
    term: Term


@dataclass(frozen=True)
class Escalier:
    """Ordered (term, point) pairs; entry k is the image of point k"""
    points: Tuple[Point, ...]
    terms: Tuple[Term, ...]
    trace: Tuple[TraceStep, ...] = ()

    @property
    def n(self) -> int:
        return len(self.points[0]) if self.points else 0

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(zip(self.terms, range(len(self.terms))))

    def term_set(self) -> Set[Term]:
        return set(self.terms)

    def sorted_terms(self) -> List[Term]:
        return lex_sorted(self.terms)

    def index_of(self, t: Term) -> int:
        """0-based index of the point mapped to ``t``"""
        try:
            return self._index[tuple(t)]
        except KeyError:
            raise KeyError(f"{render_term(tuple(t))} is not in the escalier") from None

    def point_of(self, t: Term) -> Point:
        return self.points[self.index_of(t)]

    def term_of(self, index: int) -> Term:
        return self.terms[index]

    @property
    def _index(self) -> Dict[Term, int]:
        cache = self.__dict__.get('_index_cache')
        if cache is None:
            cache = {t: i for i, t in enumerate(self.terms)}
            object.__setattr__(self, '_index_cache', cache)
        return cache


def project(point: Sequence[Any], m: int) -> Tuple:
    """pi_m: the first m coordinates"""
    return tuple(point[:m])


def coproject(point: Sequence[Any], m: int) -> Tuple:
    """pi^m: coordinates m..n (1-based, inclusive)"""
    return tuple(point[m - 1:])


def _common_prefix(a: Sequence[Any], b: Sequence[Any]) -> int:
    length = 0
    for x, y in zip(a, b):
        if x != y:
            break
        length += 1
    return length


def check_points(points: Sequence[Sequence[Any]]) -> int:
    """Uniform dimension and pairwise distinct; returns the dimension"""
    if not points:
        return 0
    n = len(points[0])
    seen: Dict[Tuple, int] = {}
    for i, point in enumerate(points):
        if len(point) != n:
            raise DimensionMismatchError(
                f"point {i + 1} has {len(point)} coordinates, expected {n}"
            )
        key = tuple(point)
        if key in seen:
            raise DuplicatePointError(seen[key] + 1, i + 1, key)
        seen[key] = i
    return n


def sigma_value(point: Sequence[Any], prior: Sequence[Sequence[Any]]) -> int:
    """
    Largest s such that some prior point shares the first s-1 coordinates

    With no prior points the value is 1 (the empty prefix is always shared).
    """
    best = 0
    for i, other in enumerate(prior):
        shared = _common_prefix(point, other)
        if shared == len(point):
            raise DuplicatePointError(i + 1, len(prior) + 1, tuple(point))
        best = max(best, shared)
    return best + 1


def sigma_set(point: Sequence[Any], prior: Sequence[Sequence[Any]]) -> List[Tuple]:
    """All prior points agreeing with ``point`` on the first s-1 coordinates"""
    s = sigma_value(point, prior)
    prefix = project(point, s - 1)
    return [tuple(p) for p in prior if project(p, s - 1) == prefix]


@lru_cache(maxsize=4096)
def _phi(points: Tuple[Tuple, ...]) -> Tuple[Term, ...]:
    return tuple(step[4] for step in _phi_steps(points))


def _phi_steps(points: Tuple[Tuple, ...]) -> List[Tuple]:
    """Raw steps (sigma, antecedent, witness, term) per point, 0-based indices"""
    n = len(points[0]) if points else 0
    terms: List[Term] = []
    steps: List[Tuple] = []
    for k, point in enumerate(points):
        if k == 0:
            terms.append((0,) * n)
            steps.append((k, 1, None, None, terms[-1]))
            continue

        s = sigma_value(point, points[:k])
        prefix = project(point, s - 1)

        antecedent = None
        for j in range(k - 1, -1, -1):
            if project(points[j], s - 1) == prefix and not any(terms[j][s:]):
                antecedent = j
                break
        if antecedent is None:
            raise InconsistentInputError(f"no sigma-antecedent for point {k + 1}")

        exponent = terms[antecedent][s - 1] + 1

        witness = None
        if s > 1:
            members = [
                j for j in range(k)
                if terms[j][s - 1] == exponent and not any(terms[j][s:])
            ]
            members.append(k)
            witness = tuple(points[j] for j in members)
            lower = _phi(tuple(project(p, s - 1) for p in witness))[-1]
        else:
            lower = ()

        term = tuple(lower) + (exponent,) + (0,) * (n - s)
        terms.append(term)
        steps.append((k, s, antecedent, witness, term))
    return steps


def cemu_trace(points: Sequence[Sequence[Any]], field: Optional[Field] = None) -> Escalier:
    """Escalier with the per-point sigma / antecedent / witness record"""
    field = field or infer_field(points)
    normalized = tuple(coerce_point(p, field) for p in points)
    check_points(normalized)

    trace = []
    for k, s, antecedent, witness, term in _phi_steps(normalized):
        trace.append(TraceStep(
            index=k + 1,
            point=normalized[k],
            sigma=s,
            antecedent=None if antecedent is None else antecedent + 1,
            witness=witness,
            term=term,
        ))
        logger.debug(
            f"P{k + 1}: s={s} m={'-' if antecedent is None else antecedent + 1} "
            f"-> {render_term(term)}"
        )
    return Escalier(
        points=normalized,
        terms=tuple(step.term for step in trace),
        trace=tuple(trace),
    )


def cemu(points: Sequence[Sequence[Any]], field: Optional[Field] = None) -> Escalier:
    """Run the correspondence on an ordered list of distinct points"""
    return cemu_trace(points, field)


def escalier_terms(escalier: Escalier) -> Set[Term]:
    return escalier.term_set()


def phi_inverse(escalier: Escalier, t: Term) -> Point:
    return escalier.point_of(t)
