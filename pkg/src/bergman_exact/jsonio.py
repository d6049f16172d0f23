"""JSON forms of domains, certificates and verification reports.

Rationals are always strings (``"p/q"`` or ``"p"``), never JSON numbers, so
nothing passes through floating point.  ``dumps`` is canonical: sorted keys,
fixed indentation, polynomial terms in graded-lex order.
"""

from __future__ import annotations

import json

from .domains import (
    COMPLEX_ELLIPSOID,
    POLYDISC,
    Ellipsoid,
    ReinhardtDomain,
    ellipsoid_from_affine,
    ellipsoid_from_poly,
)
from .errors import BergmanError, ParseError
from .fischer import FischerCertificate
from .moments import OrthogonalityReport, PiRational
from .poly import Form01, Polynomial, poly_from_json, poly_to_json
from .polyharmonic import PolyharmonicCertificate
from .scalars import GaussianRational, format_rational, parse_rational
from .transport import TransportedDomain, validate_pair


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _rationals(values, what: str) -> list:
    if not isinstance(values, list):
        raise ParseError(f"{what} must be a list")
    return [parse_rational(v) for v in values]


def domain_to_json(domain) -> dict:
    if isinstance(domain, Ellipsoid):
        if domain.moment_capable:
            return {
                "type": "ellipsoid",
                "affine": {
                    "S": [[format_rational(v) for v in row] for row in domain.affine_matrix],
                    "c": [format_rational(v) for v in domain.center],
                },
            }
        return {"type": "ellipsoid", "r": poly_to_json(domain.defining_poly)}
    if isinstance(domain, ReinhardtDomain):
        key = "radii" if domain.kind == POLYDISC else "a"
        return {"type": domain.kind, key: [format_rational(v) for v in domain.params]}
    if isinstance(domain, TransportedDomain):
        return {
            "type": "transported",
            "source": domain_to_json(domain.source),
            "f": [poly_to_json(p) for p in domain.pair.f],
            "F": [poly_to_json(p) for p in domain.pair.F],
        }
    raise TypeError(f"cannot serialise {type(domain).__name__}")


def domain_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("domain JSON must be an object")
    kind = obj.get("type")
    try:
        if kind == "ellipsoid":
            if "affine" in obj:
                aff = obj["affine"]
                if not isinstance(aff, dict) or "S" not in aff:
                    raise ParseError("'affine' needs an 'S' matrix")
                S = aff["S"]
                if not isinstance(S, list):
                    raise ParseError("'S' must be a list of rows")
                rows = [_rationals(row, "matrix row") for row in S]
                c = _rationals(aff["c"], "'c'") if "c" in aff else None
                return ellipsoid_from_affine(rows, c)
            if "r" in obj:
                return ellipsoid_from_poly(poly_from_json(obj["r"]))
            raise ParseError("ellipsoid needs 'affine' or 'r'")
        if kind == POLYDISC:
            return ReinhardtDomain(POLYDISC, tuple(_rationals(obj.get("radii"), "'radii'")))
        if kind == COMPLEX_ELLIPSOID:
            return ReinhardtDomain(COMPLEX_ELLIPSOID, tuple(_rationals(obj.get("a"), "'a'")))
        if kind == "transported":
            source = domain_from_json(obj.get("source"))
            f = [poly_from_json(p) for p in _list(obj.get("f"), "'f'")]
            F = [poly_from_json(p) for p in _list(obj.get("F"), "'F'")]
            return TransportedDomain(source, validate_pair(f, F))
    except BergmanError:
        raise
    except (TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"malformed domain: {exc}") from exc
    raise ParseError(f"unknown domain type {kind!r}")


def _list(v, what: str) -> list:
    if not isinstance(v, list):
        raise ParseError(f"{what} must be a list")
    return v


def certificate_to_json(cert) -> dict:
    if isinstance(cert, FischerCertificate):
        return {
            "input": poly_to_json(cert.input),
            "projection": poly_to_json(cert.projection),
            "solvent": poly_to_json(cert.solvent),
            "witness": [poly_to_json(c) for c in cert.witness.components],
        }
    if isinstance(cert, PolyharmonicCertificate):
        return {
            "input": poly_to_json(cert.input),
            "order": cert.order,
            "projection": poly_to_json(cert.projection),
            "solvent": poly_to_json(cert.reduced_solvent),
            "witness": poly_to_json(cert.witness),
        }
    raise TypeError(f"cannot serialise {type(cert).__name__}")


def certificate_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("certificate JSON must be an object")
    try:
        if "order" in obj:
            return PolyharmonicCertificate(
                poly_from_json(obj["input"]),
                int(obj["order"]),
                poly_from_json(obj["projection"]),
                poly_from_json(obj["solvent"]),
                poly_from_json(obj["witness"]),
            )
        return FischerCertificate(
            poly_from_json(obj["input"]),
            poly_from_json(obj["projection"]),
            poly_from_json(obj["solvent"]),
            Form01(tuple(poly_from_json(c) for c in _list(obj["witness"], "'witness'"))),
        )
    except KeyError as exc:
        raise ParseError(f"certificate is missing {exc}") from exc


def report_to_json(report: OrthogonalityReport) -> dict:
    return {
        "verified": report.verified,
        "pairings": [
            {
                "basisIndex": i,
                "q": format_rational(p.q.re),
                "im": format_rational(p.q.im),
                "piExp": p.k,
            }
            for i, p in enumerate(report.pairings)
        ],
    }


def report_from_json(obj) -> OrthogonalityReport:
    if not isinstance(obj, dict) or not isinstance(obj.get("pairings"), list):
        raise ParseError("report JSON needs a 'pairings' list")
    entries = sorted(obj["pairings"], key=lambda e: e["basisIndex"])
    report = OrthogonalityReport(
        tuple(
            PiRational(GaussianRational(parse_rational(e["q"]), parse_rational(e["im"])), int(e["piExp"]))
            for e in entries
        )
    )
    if "verified" in obj and bool(obj["verified"]) != report.verified:
        raise ParseError("report 'verified' flag contradicts its pairings")
    return report


__all__ = [
    "dumps", "loads", "domain_to_json", "domain_from_json", "certificate_to_json",
    "certificate_from_json", "report_to_json", "report_from_json", "poly_to_json",
    "poly_from_json", "Polynomial",
]
