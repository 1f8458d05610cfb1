"""JSON file formats. Every number written out is a decimal string."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .endo import EndoComplex
from .exact import Matrix, Polynomial, as_rational
from .ffcount import Report, VarietySpec
from .finite_field import prime_power
from .witt import GhostSequence, WittVector


class FormatError(ValueError):
    pass


def num_str(x) -> str:
    return str(as_rational(x))


def _rational(x, what: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"{what}: expected an integer or a decimal string, got {x!r}")
    try:
        return as_rational(x)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{what}: {x!r} is not a rational number") from None


def _int(x, what: str) -> int:
    r = _rational(x, what)
    if r.denominator != 1:
        raise FormatError(f"{what}: {x!r} is not an integer")
    return int(r)


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def poly_to_json(p: Polynomial) -> list[str]:
    return [num_str(c) for c in p.coeffs]


def witt_to_json(w: WittVector) -> dict:
    return {"num": poly_to_json(w.num), "den": poly_to_json(w.den)}


def witt_from_json(obj: Any) -> WittVector:
    if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
        raise FormatError('zeta data must be an object with "num" and "den"')
    num = Polynomial(_rational(c, "num") for c in obj["num"])
    den = Polynomial(_rational(c, "den") for c in obj["den"])
    if num[0] != 1 or den[0] != 1:
        raise FormatError("num and den must have constant term 1")
    return WittVector(num, den)


def load_witt(path: str | Path) -> WittVector:
    return witt_from_json(read_json(path))


def counts_to_json(g: GhostSequence) -> dict:
    return {"counts": [num_str(c) for c in g]}


def counts_from_json(obj: Any) -> GhostSequence:
    if isinstance(obj, dict):
        obj = obj.get("counts")
    if not isinstance(obj, list):
        raise FormatError('counts must be a list or an object with a "counts" list')
    return GhostSequence(_rational(c, "counts") for c in obj)


def load_counts(path: str | Path) -> GhostSequence:
    return counts_from_json(read_json(path))


def variety_from_json(obj: Any) -> VarietySpec:
    if not isinstance(obj, dict):
        raise FormatError("variety spec must be a JSON object")
    try:
        ambient, dim, p = obj["ambient"], obj["dim"], obj["p"]
    except KeyError as exc:
        raise FormatError(f"variety spec is missing {exc}") from None
    equations = []
    for i, eq in enumerate(obj.get("equations", [])):
        terms = []
        for term in eq:
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[1], list)):
                raise FormatError(f"equation {i}: each term must be [coeff, exponent-vector]")
            terms.append((_int(term[0], f"equation {i} coefficient"), [_int(e, f"equation {i} exponent") for e in term[1]]))
        equations.append(terms)
    try:
        return VarietySpec(
            ambient, _int(dim, "dim"), _int(p, "p"), tuple(equations), _int(obj.get("k", 1), "k")
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def variety_to_json(v: VarietySpec) -> dict:
    out = {
        "ambient": v.ambient,
        "dim": v.dim,
        "p": v.p,
        "equations": [[[c, list(e)] for c, e in eq] for eq in v.equations],
    }
    if v.k != 1:
        out["k"] = v.k
    return out


def load_variety(path: str | Path) -> VarietySpec:
    return variety_from_json(read_json(path))


@dataclass(frozen=True)
class CohomologyData:
    q: int
    complex: EndoComplex


def cohomology_from_json(obj: Any) -> CohomologyData:
    if not isinstance(obj, dict) or "components" not in obj:
        raise FormatError('cohomology data must be an object with "components"')
    if "q" not in obj:
        raise FormatError('cohomology data must give "q"')
    q = _int(obj["q"], "q")
    try:
        prime_power(q)
    except ValueError:
        raise FormatError(f"q = {q} is not a prime power") from None
    comps = {}
    for c in obj["components"]:
        if not isinstance(c, dict) or "degree" not in c or "matrix" not in c:
            raise FormatError('each component needs "degree" and "matrix"')
        deg = _int(c["degree"], "degree")
        rows = c["matrix"]
        if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != len(rows) for r in rows):
            raise FormatError(f"degree {deg}: matrix must be square")
        if deg in comps:
            raise FormatError(f"degree {deg} listed twice")
        comps[deg] = Matrix([[_rational(x, f"degree {deg} matrix") for x in r] for r in rows])
    return CohomologyData(q, EndoComplex(comps, _int(obj.get("twist", 0), "twist")))


def cohomology_to_json(q: int, e: EndoComplex) -> dict:
    return {
        "q": q,
        "components": [
            {"degree": d, "matrix": [[num_str(x) for x in r] for r in m.rows]} for d, m in e.components
        ],
        "twist": e.twist,
    }


def load_cohomology(path: str | Path) -> CohomologyData:
    return cohomology_from_json(read_json(path))


def report_to_json(report: Report) -> dict:
    return {
        "rows": [
            {"n": r.n, "brute": num_str(r.brute), "predicted": num_str(r.predicted), "pass": r.passed}
            for r in report.rows
        ],
        "pass": report.passed,
    }
