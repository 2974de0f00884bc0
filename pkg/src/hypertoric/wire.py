"""JSON wire formats: rationals, input documents and output documents."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .arrangement import ArrangementSpec, ValidationReport
from .groebner import PoincarePolynomial
from .polynomial import Polynomial
from .presentation import RingPresentation
from .stabilizers import StabilizerGroup

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise InputError(f"not a rational: {value!r}") from None
        if q == 0:
            raise InputError(f"zero denominator: {value!r}")
        return Fraction(p, q)
    raise InputError(f"rationals must be integers or 'p/q' strings, got {value!r}")


@dataclass
class InputDocument:
    normals: list[list[int]]
    offsets: Optional[list[Fraction]] = None
    max_degree: Optional[int] = None
    seed: Optional[int] = None

    def spec(self) -> ArrangementSpec:
        return ArrangementSpec(tuple(map(tuple, self.normals)), tuple(self.offsets or ()))


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def parse_input(data: Any) -> InputDocument:
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    version = data.get("schemaVersion", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise InputError(f"unsupported schemaVersion {version!r}")
    normals = data.get("normals")
    if not isinstance(normals, list) or not normals:
        raise InputError("'normals' must be a nonempty list of integer rows")
    rows = []
    for row in normals:
        if not isinstance(row, list):
            raise InputError("each normal must be a list of integers")
        rows.append([_int(x, "normal entry") for x in row])
    if len({len(r) for r in rows}) != 1 or not rows[0]:
        raise InputError("'normals' must be rectangular with at least one column")

    offsets = data.get("offsets")
    if offsets is not None:
        if not isinstance(offsets, list):
            raise InputError("'offsets' must be a list")
        if len(offsets) != len(rows):
            raise InputError(f"'offsets' has {len(offsets)} entries, expected {len(rows)}")
        offsets = [parse_rational(x) for x in offsets]

    options = data.get("options") or {}
    if not isinstance(options, dict):
        raise InputError("'options' must be an object")
    max_degree = options.get("maxDegree")
    if max_degree is not None:
        max_degree = _int(max_degree, "maxDegree")
    seed = options.get("seed")
    if seed is not None:
        seed = _int(seed, "seed")
    return InputDocument(rows, offsets, max_degree, seed)


def load_input(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    return parse_input(data)


def validation_json(report: ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "index": None if c.index is None else c.index + 1,
                "detail": c.detail,
            }
            for c in report.checks
        ],
    }


def group_json(group: StabilizerGroup) -> dict:
    elements = []
    for j, t in enumerate(group):
        elements.append(
            {
                "name": "id" if j == 0 else f"g{j}",
                "logweights": [format_rational(a) for a in t.logweights],
                "fixed": sorted(i + 1 for i in t.fixed),
                "degree": t.degree,
            }
        )
    return {"order": len(group), "elements": elements}


def polynomial_json(poly: Polynomial, names: list[str], order_key=None) -> list[dict]:
    monos = sorted(poly.terms, key=order_key, reverse=True) if order_key else sorted(poly.terms, reverse=True)
    return [
        {
            "coefficient": format_rational(poly.terms[m]),
            "exponents": {names[i]: e for i, e in enumerate(m) if e},
        }
        for m in monos
    ]


def presentation_json(pres: RingPresentation, order_key=None) -> dict:
    names = pres.names
    return {
        "generators": [{"name": nm, "degree": deg} for nm, deg in zip(names, pres.degrees)],
        "relations": [
            {"origin": r.origin, "label": r.label, "terms": polynomial_json(r.poly, names, order_key)}
            for r in pres.relations
        ],
    }


def poincare_json(p: PoincarePolynomial) -> dict:
    return {str(deg): c for deg, c in p.coefficients}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
