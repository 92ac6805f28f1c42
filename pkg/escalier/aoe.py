"""
Axis-of-Evil factorization of a minimal lex Groebner basis

For every minimal generator tau = x1^d1 ... xn^dn of the leading-term ideal
of I(X), builds d1 + ... + dn monic factors, each linear in its leading
variable x_m, whose product vanishes on X and has leading term tau.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from .cemu import Escalier, Point, cemu, project
from .errors import (
    DimensionMismatchError, InconsistentInputError, InternalInvariantError,
    ProjectionCollisionError,
)
from .linalg import solve
from .logging_utils import LoggerMixin
from .monomials import Term, divides, lex_cmp, lex_key, lex_sorted, render_term, variable
from .poly import Polynomial, normal_form, product
from .potexp import minimal_basis
from .scalars import QQ, Field, coerce_point, infer_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearFactor:
    """x_m + sum(c_w * w) with every w in T[m-1]; vanishes on ``points``"""
    m: int
    delta: int
    body: Polynomial
    support: Tuple[Term, ...]
    points: Tuple[Point, ...]

    def render(self) -> str:
        return self.body.render()


@dataclass(frozen=True)
class VariableStep:
    """State on entering variable x_m"""
    m: int
    n_m: Tuple[Term, ...]
    survivors: Tuple[int, ...]          # D_{m0}, 0-based point indices


@dataclass(frozen=True)
class FactorStep:
    """Sets used to build one factor"""
    m: int
    delta: int
    candidates: Tuple[int, ...]         # C_{m delta}
    interpolation: Tuple[int, ...]      # A_{m delta}
    support: Tuple[Term, ...]           # E_{m delta}
    survivors: Tuple[int, ...]          # D_{m delta}


@dataclass(frozen=True)
class FactoredBasisElement:
    tau: Term
    factors: Tuple[LinearFactor, ...]
    variables: Tuple[VariableStep, ...] = ()
    steps: Tuple[FactorStep, ...] = ()

    def factors_for(self, m: int) -> List[LinearFactor]:
        return [f for f in self.factors if f.m == m]

    def variable_step(self, m: int) -> Optional[VariableStep]:
        return next((v for v in self.variables if v.m == m), None)

    def step(self, m: int, delta: int) -> Optional[FactorStep]:
        return next((s for s in self.steps if s.m == m and s.delta == delta), None)

    @property
    def b1(self) -> Tuple[Any, ...]:
        """First coordinates of the points interpolated by the x1 factors"""
        return tuple(p[0] for f in self.factors_for(1) for p in f.points)

    def render(self) -> str:
        return "".join(f"({f.render()})" for f in self.factors)


@dataclass(frozen=True)
class FactoredGroebnerBasis:
    n: int
    field: Field
    elements: Tuple[FactoredBasisElement, ...]

    def leading_terms(self) -> List[Term]:
        return [e.tau for e in self.elements]

    def expanded(self) -> List[Polynomial]:
        return [expand(e, self.n, self.field) for e in self.elements]

    def reduced(self) -> List[Polynomial]:
        return reduce_basis(self.expanded())

    def element(self, tau: Term) -> FactoredBasisElement:
        for e in self.elements:
            if e.tau == tuple(tau):
                return e
        raise KeyError(f"{render_term(tuple(tau))} is not a generator")


def n_m_set(tau: Term, order_ideal: Set[Term], m: int) -> List[Term]:
    """
    Terms w of T[m] with w * x_{m+1}^d_{m+1} ... x_n^d_n in N and below tau

    Returned in the ambient length (exponents above m are zero), lex ascending.
    """
    tau = tuple(tau)
    if tau in order_ideal:
        raise InconsistentInputError(f"{render_term(tau)} lies in the escalier")
    n = len(tau)
    if not 1 <= m <= n:
        raise DimensionMismatchError(f"variable index {m} outside 1..{n}")
    result = []
    for t in order_ideal:
        if t[m:] == tau[m:] and lex_cmp(t, tau) < 0:
            result.append(tuple(t[:m]) + (0,) * (n - m))
    return lex_sorted(result)


def c_partition(tau: Term, order_ideal: Set[Term], m: int) -> Dict[int, List[Term]]:
    """Split N_m(tau) by the x_m exponent: delta -> terms with exponent d_m - delta"""
    d_m = tau[m - 1]
    parts: Dict[int, List[Term]] = {delta: [] for delta in range(d_m + 1)}
    for w in n_m_set(tau, order_ideal, m):
        delta = d_m - w[m - 1]
        if delta not in parts:
            raise InternalInvariantError(
                f"{render_term(w)} in N_{m}({render_term(tau)}) exceeds the x{m} exponent"
            )
        parts[delta].append(w)
    return parts


def interpolate_factor(points: Sequence[Sequence[Any]], m: int, n: int,
                       field: Field = QQ) -> LinearFactor:
    """
    Monic factor x_m + sum(c_w * w) vanishing on ``points``

    The support is the escalier of the projected points, which makes the
    evaluation system square and nonsingular.
    """
    points = [coerce_point(p, field) for p in points]
    leading = Polynomial.var(m, n, field)
    if not points:
        return LinearFactor(m=m, delta=0, body=leading, support=(), points=())

    projected = [project(p, m) for p in points]
    seen: Dict[Tuple, int] = {}
    for i, q in enumerate(projected):
        if q in seen:
            raise ProjectionCollisionError(
                f"points {seen[q] + 1} and {i + 1} share the projection {q} onto x1..x{m}"
            )
        seen[q] = i

    local = cemu(projected, field)
    support = [tuple(w) + (0,) * (n - m) for w in lex_sorted(local.terms)]
    for w in support:
        if w[m - 1] != 0:
            raise InternalInvariantError(
                f"interpolation support term {render_term(w)} involves x{m}"
            )

    rows = []
    for q in projected:
        row = []
        for w in support:
            value = field.one
            for coordinate, e in zip(q, w):
                if e:
                    value = value * coordinate ** e
            row.append(value)
        rows.append(row)
    coefficients = solve(rows, [-q[m - 1] for q in projected], field)

    body = leading + Polynomial(n, field, dict(zip(support, coefficients)))
    if body.leading_term() != variable(m, n) or body.leading_coeff() != field.one:
        raise InternalInvariantError(f"factor {body} does not lead with x{m}")
    for p in points:
        if body.evaluate(p) != 0:
            raise InternalInvariantError(f"factor {body} does not vanish at {p}")
    return LinearFactor(m=m, delta=0, body=body, support=tuple(support), points=tuple(points))


def _factorize(tau: Term, escalier: Escalier, field: Field) -> FactoredBasisElement:
    n = len(tau)
    points = escalier.points
    order_ideal = escalier.term_set()
    survivors = list(range(len(points)))
    factors: List[LinearFactor] = []
    variables: List[VariableStep] = []
    steps: List[FactorStep] = []

    for m in range(1, n + 1):
        if not survivors:
            break
        n_m = n_m_set(tau, order_ideal, m)
        variables.append(VariableStep(m=m, n_m=tuple(n_m), survivors=tuple(survivors)))
        d_m = tau[m - 1]

        # x1 factors go by increasing exponent, the others by increasing delta
        deltas = range(d_m, 0, -1) if m == 1 else range(1, d_m + 1)
        for delta in deltas:
            exponent = d_m - delta
            candidates = sorted(
                escalier.index_of(tuple(w[:m]) + tuple(tau[m:]))
                for w in n_m if w[m - 1] == exponent
            )
            alive = set(survivors)
            chosen = [i for i in candidates if i in alive]
            factor = interpolate_factor([points[i] for i in chosen], m, n, field)
            factor = LinearFactor(m=m, delta=delta, body=factor.body,
                                  support=factor.support, points=factor.points)
            survivors = [i for i in survivors if factor.body.evaluate(points[i]) != 0]
            factors.append(factor)
            steps.append(FactorStep(
                m=m, delta=delta,
                candidates=tuple(candidates),
                interpolation=tuple(chosen),
                support=factor.support,
                survivors=tuple(survivors),
            ))
            logger.debug(
                f"{render_term(tau)}: m={m} delta={delta} |A|={len(chosen)} "
                f"factor {factor.body} |D|={len(survivors)}"
            )
            if not survivors:
                break

    if len(factors) != sum(tau):
        raise InternalInvariantError(
            f"{render_term(tau)}: stopped after {len(factors)} of {sum(tau)} factors"
        )
    if survivors:
        raise InternalInvariantError(
            f"{render_term(tau)}: product does not vanish at {len(survivors)} point(s)"
        )
    return FactoredBasisElement(
        tau=tuple(tau), factors=tuple(factors),
        variables=tuple(variables), steps=tuple(steps),
    )


class AxisOfEvil(LoggerMixin):
    """Runs the per-generator factorizations, optionally on a worker pool"""

    def __init__(self, parallel: bool = False, max_workers: int = 4, show_progress: bool = False):
        self.parallel = parallel
        self.max_workers = max_workers
        self.show_progress = show_progress

    def run(self, escalier: Escalier, generators: Sequence[Term], field: Field) -> FactoredGroebnerBasis:
        ordered = lex_sorted(tuple(t) for t in generators)
        if self.parallel and len(ordered) > 1:
            elements = self._run_parallel(escalier, ordered, field)
        else:
            elements = [
                _factorize(tau, escalier, field)
                for tau in tqdm(ordered, desc="🐾 Factorizing", unit="gen",
                                disable=not self.show_progress)
            ]
        self.logger.info(f"Factorized {len(elements)} generator(s)")
        return FactoredGroebnerBasis(n=escalier.n, field=field, elements=tuple(elements))

    def _run_parallel(self, escalier: Escalier, ordered: List[Term], field: Field):
        done: Dict[Term, FactoredBasisElement] = {}
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_tau = {
                executor.submit(_factorize, tau, escalier, field): tau
                for tau in ordered
            }
            for future in tqdm(as_completed(future_to_tau), total=len(ordered),
                               desc="🐾 Factorizing", unit="gen",
                               disable=not self.show_progress):
                tau = future_to_tau[future]
                done[tau] = future.result()
        return [done[tau] for tau in ordered]


def axis_of_evil(points: Sequence[Sequence[Any]],
                 escalier: Optional[Escalier] = None,
                 generators: Optional[Sequence[Term]] = None,
                 *,
                 field: Optional[Field] = None,
                 validate: bool = True,
                 parallel: bool = False,
                 max_workers: int = 4,
                 show_progress: bool = False) -> FactoredGroebnerBasis:
    """
    Factorized minimal lex Groebner basis of I(points)

    ``escalier`` and ``generators`` are recomputed when omitted; when given
    they are checked against a recomputation unless ``validate`` is False.
    """
    field = field or infer_field(points)
    if escalier is None or validate:
        computed = cemu(points, field)
        if escalier is not None and (escalier.points != computed.points
                                     or escalier.terms != computed.terms):
            raise InconsistentInputError("supplied escalier does not match the points")
        escalier = computed if escalier is None else escalier
    if generators is None or validate:
        computed_generators = minimal_basis(escalier)
        if generators is not None and set(map(tuple, generators)) != set(computed_generators):
            raise InconsistentInputError("supplied generators are not the minimal basis of the escalier")
        generators = computed_generators if generators is None else generators

    runner = AxisOfEvil(parallel=parallel, max_workers=max_workers, show_progress=show_progress)
    return runner.run(escalier, generators, field)


def expand(element: FactoredBasisElement, n: Optional[int] = None,
           field: Optional[Field] = None) -> Polynomial:
    """Product of the factors"""
    if element.factors:
        first = element.factors[0].body
        n, field = first.n, first.field
    if n is None:
        n = len(element.tau)
    return product((f.body for f in element.factors), n, field or QQ)


def reduce_basis(basis: Sequence[Polynomial]) -> List[Polynomial]:
    """
    Reduced Groebner basis from a minimal one

    Each element is made monic and its tail reduced by the elements with
    smaller leading terms.
    """
    ordered = sorted(basis, key=lambda f: lex_key(f.leading_term()))
    leading = [f.leading_term() for f in ordered]
    for i, a in enumerate(leading):
        for j, b in enumerate(leading):
            if i != j and divides(a, b):
                raise InconsistentInputError(
                    f"not a minimal basis: {render_term(a)} divides {render_term(b)}"
                )
    reduced: List[Polynomial] = []
    for f in ordered:
        f = f.monic()
        lt = f.leading_term()
        head = Polynomial.monomial(lt, 1, f.field)
        reduced.append(head + normal_form(f.tail(), reduced))
    return reduced
