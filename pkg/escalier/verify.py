"""
Independent checks on a computed basis

``moeller_gb`` recomputes the reduced lex Groebner basis of I(X) by
evaluating terms at the points and row-reducing, with no reference to the
point order. The certificate combines vanishing, leading terms and the
|N| = |X| count.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from tqdm import tqdm

from .aoe import FactoredGroebnerBasis, axis_of_evil, reduce_basis
from .cemu import Point, cemu, check_points, project
from .instances import random_point_set
from .linalg import EchelonBasis
from .monomials import (
    Term, divides, is_order_ideal, lex_key, lex_sorted, minimal_generators_bruteforce,
    multiply, one, render_term, variable,
)
from .poly import Polynomial, normal_form, spoly
from .potexp import minimal_basis
from .scalars import Field, coerce_point, infer_field, render_scalar

logger = logging.getLogger(__name__)


@dataclass
class VanishingReport:
    values: List[List[Any]]             # values[i][k] = F[i](X[k])
    witness: Optional[Tuple[int, int]] = None   # (element, point), both 0-based

    @property
    def passed(self) -> bool:
        return self.witness is None


def check_vanishing(basis: Sequence[Polynomial], points: Sequence[Sequence[Any]]) -> VanishingReport:
    """Evaluate every polynomial at every point; the first nonzero is the witness"""
    values: List[List[Any]] = []
    witness = None
    for i, f in enumerate(basis):
        row = [f.evaluate(p) for p in points]
        values.append(row)
        if witness is None:
            for k, v in enumerate(row):
                if v != 0:
                    witness = (i, k)
                    break
    return VanishingReport(values=values, witness=witness)


@dataclass
class MoellerResult:
    escalier: List[Term]
    reduced: List[Polynomial]

    @property
    def leading_terms(self) -> List[Term]:
        return [f.leading_term() for f in self.reduced]


def _evaluation_vector(t: Term, points: Sequence[Point], field: Field) -> List[Any]:
    vector = []
    for p in points:
        value = field.one
        for coordinate, e in zip(p, t):
            if e:
                value = value * coordinate ** e
        vector.append(value)
    return vector


def moeller_gb(points: Sequence[Sequence[Any]], n: Optional[int] = None,
               field: Optional[Field] = None) -> MoellerResult:
    """
    Reduced lex Groebner basis of I(points) and its escalier

    Candidate terms are visited in lex-ascending order from 1; multiples of
    leading terms already found are skipped. A term whose evaluation vector
    depends on the escalier so far yields the basis element
    ``term - combination``; otherwise it joins the escalier.
    """
    field = field or infer_field(points)
    normalized = [coerce_point(p, field) for p in points]
    dimension = check_points(normalized)
    n = n if n is not None else dimension
    if n < 1:
        raise ValueError("cannot infer the variable count of an empty point set")

    echelon = EchelonBasis(len(normalized), field)
    escalier: List[Term] = []
    reduced: List[Polynomial] = []
    leading: List[Term] = []

    start = one(n)
    heap = [(lex_key(start), start)]
    queued = {start}
    while heap:
        _, t = heapq.heappop(heap)
        if any(divides(lt, t) for lt in leading):
            continue
        dependency = echelon.insert(_evaluation_vector(t, normalized, field), t)
        if dependency is None:
            escalier.append(t)
            for i in range(1, n + 1):
                successor = multiply(t, variable(i, n))
                if successor not in queued:
                    queued.add(successor)
                    heapq.heappush(heap, (lex_key(successor), successor))
        else:
            leading.append(t)
            reduced.append(Polynomial(n, field, dependency))

    logger.debug(f"Moeller: |N|={len(escalier)} |G|={len(reduced)}")
    return MoellerResult(escalier=lex_sorted(escalier), reduced=reduced)


@dataclass
class SPolyReport:
    remainders: Dict[Tuple[int, int], Polynomial] = field(default_factory=dict)

    @property
    def failures(self) -> List[Tuple[int, int]]:
        return [pair for pair, r in self.remainders.items() if not r.is_zero()]

    @property
    def passed(self) -> bool:
        return not self.failures


def spoly_check(basis: Sequence[Polynomial]) -> SPolyReport:
    """Normal form of every S-polynomial against the basis"""
    report = SPolyReport()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            report.remainders[(i, j)] = normal_form(spoly(basis[i], basis[j]), basis)
    return report


@dataclass
class EliminationReport:
    j: int
    restricted: List[Polynomial]
    expected: List[Polynomial]

    @property
    def passed(self) -> bool:
        return self.restricted == self.expected


def _in_first_variables(f: Polynomial, j: int) -> bool:
    return all(not any(t[j:]) for t in f.coeffs)


def elimination_check(reduced: Sequence[Polynomial], points: Sequence[Sequence[Any]],
                      j: int) -> EliminationReport:
    """
    The elements of the reduced basis that only involve x1..xj against the
    reduced basis of the projected points
    """
    if not reduced:
        raise ValueError("elimination check needs a nonempty basis")
    n = reduced[0].n
    field = reduced[0].field
    restricted = sorted(
        (f for f in reduced if _in_first_variables(f, j)),
        key=lambda f: lex_key(f.leading_term()),
    )
    projected: List[Tuple] = []
    seen = set()
    for p in points:
        q = project(coerce_point(p, field), j)
        if q not in seen:
            seen.add(q)
            projected.append(q)
    oracle = moeller_gb(projected, n=j, field=field)
    padding = (0,) * (n - j)
    expected = [
        Polynomial(n, field, {t + padding: c for t, c in g.coeffs.items()})
        for g in oracle.reduced
    ]
    expected.sort(key=lambda f: lex_key(f.leading_term()))
    return EliminationReport(j=j, restricted=restricted, expected=expected)


@dataclass
class GBCertificate:
    leading_terms: List[Term]
    expected_terms: List[Term]
    vanishing: VanishingReport
    escalier_size: int
    point_count: int
    spolys: Optional[SPolyReport] = None

    @property
    def terms_match(self) -> bool:
        return sorted(self.leading_terms) == sorted(self.expected_terms)

    @property
    def cardinality_match(self) -> bool:
        return self.escalier_size == self.point_count

    @property
    def valid(self) -> bool:
        return (self.vanishing.passed and self.terms_match and self.cardinality_match
                and (self.spolys is None or self.spolys.passed))

    def problems(self) -> List[str]:
        problems = []
        if not self.vanishing.passed:
            i, k = self.vanishing.witness
            value = render_scalar(self.vanishing.values[i][k])
            problems.append(
                f"element {render_term(self.leading_terms[i])} does not vanish "
                f"at point {k + 1} (value {value})"
            )
        if not self.terms_match:
            got = ", ".join(render_term(t) for t in lex_sorted(self.leading_terms))
            want = ", ".join(render_term(t) for t in self.expected_terms)
            problems.append(f"leading terms [{got}] differ from the minimal basis [{want}]")
        if not self.cardinality_match:
            problems.append(f"escalier has {self.escalier_size} terms for {self.point_count} points")
        if self.spolys is not None:
            for i, j in self.spolys.failures:
                problems.append(
                    f"S-polynomial of {render_term(self.leading_terms[i])} and "
                    f"{render_term(self.leading_terms[j])} does not reduce to 0"
                )
        return problems

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "valid": self.valid,
            "leading_terms": [list(t) for t in self.leading_terms],
            "expected_terms": [list(t) for t in self.expected_terms],
            "vanishing": self.vanishing.passed,
            "escalier_size": self.escalier_size,
            "point_count": self.point_count,
            "problems": self.problems(),
        }
        if self.vanishing.witness is not None:
            i, k = self.vanishing.witness
            data["witness"] = {
                "element": list(self.leading_terms[i]),
                "point": k + 1,
                "value": render_scalar(self.vanishing.values[i][k]),
            }
        if self.spolys is not None:
            data["spolys"] = self.spolys.passed
        return data

    def render(self) -> str:
        lines = [
            f"certificate: {'VALID' if self.valid else 'INVALID'}",
            f"elements: {len(self.leading_terms)}",
            f"points: {self.point_count}",
            f"escalier size: {self.escalier_size}",
            f"vanishing: {'ok' if self.vanishing.passed else 'FAILED'}",
            f"leading terms: {'ok' if self.terms_match else 'FAILED'}",
        ]
        if self.spolys is not None:
            lines.append(f"s-polynomials: {'ok' if self.spolys.passed else 'FAILED'}")
        lines.extend(f"problem: {p}" for p in self.problems())
        return "\n".join(lines)


def gb_certificate(basis: Union[FactoredGroebnerBasis, Sequence[Polynomial]],
                   points: Sequence[Sequence[Any]],
                   spolys: bool = False) -> GBCertificate:
    """
    Certify that ``basis`` is a minimal lex Groebner basis of I(points)

    A failed certificate is a result, not an error.
    """
    if isinstance(basis, FactoredGroebnerBasis):
        expanded = basis.expanded()
        field = basis.field
    else:
        expanded = list(basis)
        field = expanded[0].field if expanded else infer_field(points)
    normalized = [coerce_point(p, field) for p in points]
    escalier = cemu(normalized, field)
    expected = minimal_basis(escalier, n=len(normalized[0]) if normalized else None)
    return GBCertificate(
        leading_terms=[f.leading_term() for f in expanded],
        expected_terms=expected,
        vanishing=check_vanishing(expanded, normalized),
        escalier_size=len(escalier),
        point_count=len(normalized),
        spolys=spoly_check(expanded) if spolys else None,
    )


def certify_points(points: Sequence[Sequence[Any]], field: Optional[Field] = None,
                   **options) -> GBCertificate:
    """Run the factorization on ``points`` and certify its output"""
    basis = axis_of_evil(points, field=field, **options)
    return gb_certificate(basis, points, spolys=True)


@dataclass
class SelfCheckReport:
    instances: int
    seed: Optional[int]
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [f"selfcheck: {self.instances} instance(s), seed {self.seed}: "
                 f"{'ok' if self.passed else f'{len(self.failures)} failure(s)'}"]
        lines.extend(f"  {f}" for f in self.failures)
        return "\n".join(lines)


def check_instance(points: Sequence[Tuple[int, ...]]) -> List[str]:
    """Every property of the pipeline on one point set; returns failure descriptions"""
    failures = []
    n = len(points[0])
    escalier = cemu(points)
    terms = list(escalier.terms)

    if len(escalier) != len(points):
        failures.append(f"escalier has {len(escalier)} terms for {len(points)} points")
    if not is_order_ideal(terms):
        failures.append("escalier is not an order ideal")
    for k in range(1, len(points)):
        if list(cemu(points[:k]).terms) != terms[:k]:
            failures.append(f"prefix of length {k} is not stable")
            break

    generators = minimal_basis(escalier)
    if generators != minimal_generators_bruteforce(terms, n):
        failures.append("expansion disagrees with brute-force generators")

    basis = axis_of_evil(points, escalier, generators)
    for element in basis.elements:
        for m in range(1, n + 1):
            if len(element.factors_for(m)) != element.tau[m - 1]:
                failures.append(f"{render_term(element.tau)}: wrong factor count for x{m}")
    certificate = gb_certificate(basis, points, spolys=False)
    failures.extend(certificate.problems())

    reduced = reduce_basis(basis.expanded())
    oracle = moeller_gb(points)
    if reduced != oracle.reduced:
        failures.append("reduced basis differs from the Moeller oracle")
    if set(oracle.escalier) != set(terms):
        failures.append("escalier term set differs from the Moeller oracle")
    if set(cemu(list(reversed(points))).terms) != set(terms):
        failures.append("escalier term set depends on the point order")
    if n <= 3 and len(points) <= 12 and not spoly_check(reduced).passed:
        failures.append("an S-polynomial of the reduced basis does not reduce to 0")
    for j in range(1, n + 1):
        if not elimination_check(reduced, points, j).passed:
            failures.append(f"elimination fails for j={j}")
    return failures


def selfcheck(instances: int = 100, seed: Optional[int] = None, max_n: int = 4,
              max_points: int = 20, coord_range: int = 7,
              show_progress: bool = False) -> SelfCheckReport:
    """Randomized sweep of ``check_instance`` over generated point sets"""
    rng = np.random.default_rng(seed)
    report = SelfCheckReport(instances=instances, seed=seed)
    for k in tqdm(range(instances), desc="🐾 Self-check", unit="inst", disable=not show_progress):
        n = int(rng.integers(1, max_n + 1))
        count = int(rng.integers(1, max_points + 1))
        points = random_point_set(n, count, coord_range, rng)
        for problem in check_instance(points):
            report.failures.append(f"instance {k + 1} (n={n}, {len(points)} points): {problem}")
    return report
