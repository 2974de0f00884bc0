"""Command line entry point.

    hypertoric-cr input.json [--json out.json] [--report] [--affinize]
                             [--seed N] [--max-degree D] [--check-oracle]
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Optional, Sequence

from . import wire
from .arrangement import AffinizationError, compute_weights, is_simple, random_simple_affinization, validate
from .groebner import NotFiniteError, groebner_of, poincare, presentation_order
from .oracle import OracleBoundWarning, oracle_poincare
from .presentation import build_presentation
from .stabilizers import GroupTooLargeError, full_group

EXIT_OK = 0
EXIT_PARSE = 64
EXIT_INVALID = 65
EXIT_NOT_SIMPLE = 66
EXIT_ORACLE_MISMATCH = 70
EXIT_NOT_FINITE = 71


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="hypertoric-cr",
        description="Ring presentation and orbifold Poincare polynomial from a weighted hyperplane arrangement.",
    )
    p.add_argument("input", help="JSON file with 'normals' and optional 'offsets' and 'options'")
    p.add_argument("--json", metavar="PATH", help="write the JSON result here ('-' for standard output)")
    p.add_argument("--report", action="store_true", help="print the text report (default when --json is absent)")
    p.add_argument("--affinize", action="store_true", help="replace non-simple offsets by a random simple affinization")
    p.add_argument("--seed", type=int, default=None, help="seed for random affinization (default 0)")
    p.add_argument("--max-degree", type=int, default=None, help="top degree for the oracle check (default 4n)")
    p.add_argument("--check-oracle", action="store_true", help="cross-check the Poincare polynomial by linear algebra")
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, dict]:
    args = build_parser().parse_args(argv)
    doc: dict = {"schemaVersion": wire.SCHEMA_VERSION}
    try:
        inp = wire.load_input(args.input)
    except wire.InputError as exc:
        doc["error"] = str(exc)
        return EXIT_PARSE, doc

    seed = args.seed if args.seed is not None else (inp.seed if inp.seed is not None else 0)
    max_degree = args.max_degree if args.max_degree is not None else inp.max_degree
    if max_degree is not None and (max_degree < 0 or max_degree % 2):
        doc["error"] = f"max degree must be a nonnegative even integer, got {max_degree}"
        return EXIT_PARSE, doc

    spec = inp.spec()
    report = validate(spec)
    doc["input"] = {"normals": [list(a) for a in spec.normals]}
    doc["validation"] = wire.validation_json(report)
    if not report.ok:
        return EXIT_INVALID, doc

    affinized = False
    if inp.offsets is None or (args.affinize and not is_simple(spec)):
        try:
            spec = spec.with_offsets(random_simple_affinization(spec.normals, seed))
        except AffinizationError as exc:
            doc["error"] = str(exc)
            return EXIT_NOT_SIMPLE, doc
        affinized = True
    doc["input"].update(
        offsets=[wire.format_rational(r) for r in spec.offsets], affinized=affinized, seed=seed
    )
    simple = is_simple(spec)
    doc["simple"] = simple
    if not simple:
        doc["error"] = "arrangement is not simple; rerun with --affinize"
        return EXIT_NOT_SIMPLE, doc

    doc["weights"] = [list(lam) for lam in compute_weights(spec)]
    try:
        group = full_group(spec)
    except GroupTooLargeError as exc:
        doc["error"] = str(exc)
        return EXIT_NOT_FINITE, doc
    doc["group"] = wire.group_json(group)

    pres = build_presentation(spec, group)
    order = presentation_order(pres)
    doc["presentation"] = wire.presentation_json(pres, order.key)
    try:
        poly = poincare(groebner_of(pres))
    except NotFiniteError as exc:
        doc["error"] = f"quotient is not finite dimensional: {exc}"
        return EXIT_NOT_FINITE, doc
    doc["poincare"] = wire.poincare_json(poly)
    doc["poincarePolynomial"] = str(poly)
    doc["eulerCharacteristic"] = poly.euler_characteristic

    if args.check_oracle:
        top = max_degree if max_degree is not None else 4 * spec.n
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OracleBoundWarning)
            check = oracle_poincare(pres, top)
        agree = all(check[deg] == poly[deg] for deg in range(0, top + 1, 2)) and poly.top_degree <= top
        doc["oracle"] = {
            "maxDegree": top,
            "poincare": wire.poincare_json(check),
            "boundWarning": any(issubclass(w.category, OracleBoundWarning) for w in caught),
        }
        doc["oracleAgreement"] = agree
        if not agree:
            return EXIT_ORACLE_MISMATCH, doc
    return EXIT_OK, doc


def format_report(doc: dict) -> str:
    lines = []
    if "input" in doc:
        lines.append("normals: " + ", ".join("(" + ", ".join(map(str, a)) + ")" for a in doc["input"]["normals"]))
        if "offsets" in doc["input"]:
            tag = " (random simple affinization, seed %d)" % doc["input"]["seed"] if doc["input"]["affinized"] else ""
            lines.append("offsets: " + ", ".join(doc["input"]["offsets"]) + tag)
    if "validation" in doc:
        for c in doc["validation"]["checks"]:
            if not c["passed"]:
                where = f" at hyperplane {c['index']}" if c["index"] else ""
                lines.append(f"validation failed: {c['name']}{where}: {c['detail']}")
    if "weights" in doc:
        lines.append("weights: " + ", ".join("(" + ", ".join(map(str, w)) + ")" for w in doc["weights"]))
    if "group" in doc:
        lines.append(f"stabilizer group: order {doc['group']['order']}")
        for el in doc["group"]["elements"]:
            lines.append(
                f"  {el['name']:>4}  logweights ({', '.join(el['logweights'])})"
                f"  S(t) = {{{', '.join(map(str, el['fixed']))}}}  degree {el['degree']}"
            )
    if "presentation" in doc:
        gens = doc["presentation"]["generators"]
        lines.append("generators: " + ", ".join(f"{g['name']} (deg {g['degree']})" for g in gens))
        lines.append("relations:")
        for rel in doc["presentation"]["relations"]:
            lines.append(f"  [{rel['origin']}] {_format_terms(rel['terms'])}")
    if "poincare" in doc:
        lines.append("Poincare polynomial: " + doc["poincarePolynomial"])
        lines.append("  coefficients: " + ", ".join(f"t^{k}: {v}" for k, v in doc["poincare"].items()))
        lines.append(f"Euler characteristic: {doc['eulerCharacteristic']}")
    if "oracle" in doc:
        verdict = "agrees" if doc["oracleAgreement"] else "DISAGREES"
        coeffs = ", ".join(f"t^{k}: {v}" for k, v in doc["oracle"]["poincare"].items())
        lines.append(f"oracle (max degree {doc['oracle']['maxDegree']}): {coeffs} -- {verdict}")
        if doc["oracle"]["boundWarning"]:
            lines.append("  warning: top two oracle degrees are nonzero; bound may be too small")
    if "error" in doc:
        lines.append("error: " + doc["error"])
    return "\n".join(lines) + "\n"


def _format_terms(terms: list[dict]) -> str:
    out = ""
    for i, term in enumerate(terms):
        coeff = term["coefficient"]
        neg = coeff.startswith("-")
        mag = coeff[1:] if neg else coeff
        mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in term["exponents"].items())
        body = mono if mag == "1" and mono else (f"{mag}*{mono}" if mono else mag)
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    status, doc = run(argv)
    if args.json:
        text = wire.dumps(doc)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    if args.report or not args.json:
        stream = sys.stdout if status == EXIT_OK else sys.stderr
        stream.write(format_report(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
