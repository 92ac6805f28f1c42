"""
Serialization of command results to text, JSON and CSV

All renderers are deterministic: the same result always yields the same
bytes. Coefficients are exact reduced fractions (or residues mod p).
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .aoe import FactoredGroebnerBasis
from .cemu import Escalier
from .errors import InconsistentInputError
from .monomials import Term, border, degree, render_term
from .poly import Polynomial, product
from .scalars import Field, field_from_name, render_scalar
from .verify import GBCertificate, SelfCheckReport


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, lineterminator="\n")


class OutputHandler:
    """Render command results in the requested format"""

    # ---- escalier ----

    @staticmethod
    def escalier_text(escalier: Escalier, trace: bool = False) -> str:
        lines = []
        for step in escalier.trace:
            line = f"P{step.index} → {render_term(step.term)}"
            if trace:
                antecedent = "-" if step.antecedent is None else step.antecedent
                witness = ""
                if step.witness is not None:
                    rendered = ", ".join(
                        "(" + ",".join(render_scalar(c) for c in p) + ")" for p in step.witness
                    )
                    witness = f"  W={{{rendered}}}"
                line += f"  s={step.sigma} m={antecedent}{witness}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    @staticmethod
    def escalier_records(escalier: Escalier, trace: bool = False) -> List[Dict[str, Any]]:
        records = []
        for step in escalier.trace:
            record = {
                "point": step.index,
                "coordinates": [render_scalar(c) for c in step.point],
                "term": list(step.term),
                "rendered": render_term(step.term),
            }
            if trace:
                record["sigma"] = step.sigma
                record["antecedent"] = step.antecedent
                record["witness"] = None if step.witness is None else [
                    [render_scalar(c) for c in p] for p in step.witness
                ]
            records.append(record)
        return records

    @staticmethod
    def escalier_json(escalier: Escalier, trace: bool = False) -> str:
        return _dumps({
            "n": escalier.n,
            "escalier": OutputHandler.escalier_records(escalier, trace),
        })

    @staticmethod
    def escalier_csv(escalier: Escalier, trace: bool = False) -> str:
        rows = []
        for step in escalier.trace:
            row = {"point": step.index, "term": render_term(step.term)}
            for i, c in enumerate(step.point, start=1):
                row[f"x{i}"] = render_scalar(c)
            if trace:
                row["sigma"] = step.sigma
                row["antecedent"] = "" if step.antecedent is None else step.antecedent
            rows.append(row)
        return _csv(pd.DataFrame(rows))

    # ---- minbasis ----

    @staticmethod
    def minbasis_text(generators: Sequence[Term], escalier_terms: Sequence[Term], n: int) -> str:
        lines = [render_term(t) for t in generators]
        lines.append(
            f"# {len(generators)} generator(s), escalier size {len(escalier_terms)}, "
            f"border size {len(border(escalier_terms, n))}"
        )
        return "\n".join(lines) + "\n"

    @staticmethod
    def minbasis_json(generators: Sequence[Term], escalier_terms: Sequence[Term], n: int) -> str:
        return _dumps({
            "n": n,
            "generators": [list(t) for t in generators],
            "escalier_size": len(escalier_terms),
            "border_size": len(border(escalier_terms, n)),
        })

    @staticmethod
    def minbasis_csv(generators: Sequence[Term]) -> str:
        rows = []
        for t in generators:
            row = {"generator": render_term(t), "degree": degree(t)}
            for i, e in enumerate(t, start=1):
                row[f"x{i}"] = e
            rows.append(row)
        return _csv(pd.DataFrame(rows))

    # ---- aoe ----

    @staticmethod
    def basis_dict(basis: FactoredGroebnerBasis, factored: bool = True, expanded: bool = False,
                   reduced: bool = False, certificate: Optional[GBCertificate] = None) -> Dict[str, Any]:
        expanded_list = basis.expanded() if expanded else []
        reduced_list = basis.reduced() if reduced else []
        elements = []
        for k, element in enumerate(basis.elements):
            entry: Dict[str, Any] = {"tau": list(element.tau)}
            if factored:
                entry["factors"] = [
                    {"m": f.m, "delta": f.delta, "body": f.body.to_json()}
                    for f in element.factors
                ]
            if expanded:
                entry["expanded"] = expanded_list[k].to_json()
            if reduced:
                entry["reduced"] = reduced_list[k].to_json()
            elements.append(entry)
        data = {"field": basis.field.name, "n": basis.n, "elements": elements}
        if certificate is not None:
            data["certificate"] = certificate.to_dict()
        return data

    @staticmethod
    def basis_json(basis: FactoredGroebnerBasis, **options) -> str:
        return _dumps(OutputHandler.basis_dict(basis, **options))

    @staticmethod
    def basis_text(basis: FactoredGroebnerBasis, factored: bool = True, expanded: bool = False,
                   reduced: bool = False, certificate: Optional[GBCertificate] = None) -> str:
        expanded_list = basis.expanded() if expanded else []
        reduced_list = basis.reduced() if reduced else []
        lines = []
        for k, element in enumerate(basis.elements):
            lines.append(f"{render_term(element.tau)}:")
            if factored:
                lines.append(f"  factored: {element.render()}")
            if expanded:
                lines.append(f"  expanded: {expanded_list[k].render()}")
            if reduced:
                lines.append(f"  reduced: {reduced_list[k].render()}")
        if certificate is not None:
            lines.append(certificate.render())
        return "\n".join(lines) + "\n"

    # ---- verify / selfcheck ----

    @staticmethod
    def certificate_text(certificate: GBCertificate) -> str:
        return certificate.render() + "\n"

    @staticmethod
    def certificate_json(certificate: GBCertificate) -> str:
        return _dumps(certificate.to_dict())

    @staticmethod
    def selfcheck_text(report: SelfCheckReport) -> str:
        return report.render() + "\n"

    @staticmethod
    def selfcheck_json(report: SelfCheckReport) -> str:
        return _dumps({
            "instances": report.instances,
            "seed": report.seed,
            "passed": report.passed,
            "failures": report.failures,
        })

    # ---- files ----

    @staticmethod
    def write(text: str, path: Optional[str]):
        """Write command output to a file"""
        if path:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)


def load_saved_basis(text: str, field: Optional[Field] = None) -> Tuple[Field, int, List[Polynomial]]:
    """
    Polynomials from a saved ``aoe --format json`` document

    Each element is rebuilt from its factors when present, otherwise from
    its expanded or reduced form.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InconsistentInputError(f"saved basis is not valid JSON: {e.msg}")
    try:
        saved_field = field_from_name(data.get("field", "q"))
        field = field or saved_field
        if field != saved_field:
            raise InconsistentInputError(
                f"saved basis is over {saved_field.name}, session uses {field.name}"
            )
        n = int(data["n"])
        polys = []
        for entry in data["elements"]:
            if "factors" in entry:
                factors = [Polynomial.from_json(f["body"], n, field) for f in entry["factors"]]
                polys.append(product(factors, n, field))
            elif "expanded" in entry:
                polys.append(Polynomial.from_json(entry["expanded"], n, field))
            elif "reduced" in entry:
                polys.append(Polynomial.from_json(entry["reduced"], n, field))
            else:
                raise InconsistentInputError("saved element has no polynomial")
    except (KeyError, TypeError, AttributeError, ValueError) as e:
        if isinstance(e, InconsistentInputError):
            raise
        raise InconsistentInputError(f"malformed saved basis: {e}")
    return field, n, polys
