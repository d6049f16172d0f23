"""Command-line front end.

Every invocation prints one canonical JSON document; errors are reported as
``{"status": "error", "error": {"code": ..., "message": ...}}`` with a nonzero
exit status, never as a traceback.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .domains import COMPLEX_ELLIPSOID, Ellipsoid, ReinhardtDomain
from .errors import BergmanError, InvalidDomain, ParseError
from .fischer import bergman_project, dimensions
from .jsonio import (
    certificate_to_json,
    domain_from_json,
    dumps,
    loads,
    report_to_json,
)
from .moments import reinhardt_project, verify_orthogonality
from .poly import REAL, ZZBAR, convert_coords, poly_from_json, poly_to_json
from .polyharmonic import polyharmonic_basis, polyharmonic_project
from .scalars import format_gaussian, parse_gaussian
from .transport import TransportedDomain, transport_project

MODES = ("auto", "complex", "polyharmonic", "reinhardt")

EXIT_CODES = {
    "parse_error": 2,
    "dimension_mismatch": 3,
    "moment_unavailable": 4,
    "singular_matrix": 5,
    "singular_gram": 5,
    "invalid_pair": 6,
    "invalid_domain": 7,
    "internal_error": 70,
}


@dataclass
class Request:
    command: str
    domain: object = None
    polynomial: object = None
    projection: object = None
    mode: str = "auto"
    order: int | None = None
    point: list | None = None
    verify: bool = True
    n: int | None = None
    N: int | None = None


def _resolve_mode(domain, mode: str) -> str:
    if mode != "auto":
        return mode
    if isinstance(domain, ReinhardtDomain):
        return "reinhardt"
    if isinstance(domain, TransportedDomain):
        return "transport"
    if isinstance(domain, Ellipsoid):
        return "complex" if domain.dim % 2 == 0 else "polyharmonic"
    raise InvalidDomain(f"unsupported domain {type(domain).__name__}")


def _project(req: Request) -> dict:
    domain, P = req.domain, req.polynomial
    mode = _resolve_mode(domain, req.mode)
    out: dict = {"mode": mode}
    if mode == "complex":
        if isinstance(domain, ReinhardtDomain) and domain.kind != COMPLEX_ELLIPSOID:
            raise InvalidDomain("complex mode needs an ellipsoid; use --mode reinhardt for polydiscs")
        cert = bergman_project(domain, P)
        out["certificate"] = certificate_to_json(cert)
        out["projection"] = poly_to_json(cert.projection)
        if req.verify and domain.moment_capable:
            out["report"] = report_to_json(verify_orthogonality(domain, cert.input, cert.projection))
    elif mode == "reinhardt":
        if not isinstance(domain, ReinhardtDomain):
            raise InvalidDomain("reinhardt mode needs a polydisc or complex ellipsoid")
        P = P if P.kind == ZZBAR else convert_coords(P, ZZBAR)
        H = reinhardt_project(domain, P)
        out["projection"] = poly_to_json(H)
        if req.verify:
            out["report"] = report_to_json(verify_orthogonality(domain, P, H))
    elif mode == "polyharmonic":
        if not isinstance(domain, Ellipsoid):
            raise InvalidDomain("polyharmonic mode needs an ellipsoid")
        m = req.order if req.order is not None else 1
        cert = polyharmonic_project(domain, m, P)
        out["order"] = m
        out["certificate"] = certificate_to_json(cert)
        out["projection"] = poly_to_json(cert.projection)
        if req.verify and domain.moment_capable:
            basis = polyharmonic_basis(domain.dim, m, max(cert.input.degree, 0) + 2)
            out["report"] = report_to_json(
                verify_orthogonality(domain, cert.input, cert.projection, basis)
            )
    elif mode == "transport":
        out["projection"] = poly_to_json(transport_project(domain, P))
    else:
        raise ParseError(f"unknown mode {mode!r}")
    return out


def _verify(req: Request) -> dict:
    domain, P, H = req.domain, req.polynomial, req.projection
    if P.kind == REAL and H.kind == REAL and (req.order is not None or domain.dim % 2):
        m = req.order if req.order is not None else 1
        basis = polyharmonic_basis(domain.dim, m, max(P.degree, H.degree, 0) + 2)
        report = verify_orthogonality(domain, P, H, basis)
    else:
        if P.kind == REAL:
            P = convert_coords(P, ZZBAR)
        if H.kind == REAL:
            H = convert_coords(H, ZZBAR)
        report = verify_orthogonality(domain, P, H)
    return {"report": report_to_json(report)}


def run(req: Request) -> dict:
    """Execute a request and return the response object (``status`` ok or error)."""
    try:
        if req.command == "project":
            body = _project(req)
        elif req.command == "transport":
            if not isinstance(req.domain, TransportedDomain):
                raise InvalidDomain("transport needs a domain of type 'transported'")
            body = {"projection": poly_to_json(transport_project(req.domain, req.polynomial))}
        elif req.command == "member":
            body = {"member": req.domain.contains(req.point)}
            if isinstance(req.domain, TransportedDomain):
                body["preimage"] = [format_gaussian(v) for v in req.domain.preimage(req.point)]
        elif req.command == "dims":
            full, holo, quot = dimensions(req.n, req.N)
            body = {"n": req.n, "N": req.N, "dimP": full, "dimHP": holo, "quotient": quot}
        elif req.command == "verify":
            body = _verify(req)
        else:
            raise ParseError(f"unknown command {req.command!r}")
    except BergmanError as exc:
        return _error(exc.code, str(exc))
    except (ValueError, ZeroDivisionError, IndexError) as exc:
        return _error("parse_error", str(exc))
    except Exception as exc:  # noqa: BLE001 - the CLI contract forbids tracebacks
        return _error("internal_error", f"{type(exc).__name__}: {exc}")
    return {"status": "ok", "command": req.command, **body}


def _error(code: str, message: str) -> dict:
    return {"status": "error", "error": {"code": code, "message": message}}


def _read_json(source: str):
    text = source if source.lstrip().startswith("{") else _read_file(source)
    return loads(text)


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _parse_point(text: str) -> list:
    parts = [p for p in text.split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise ParseError(f"malformed point {text!r}")
    return [parse_gaussian(p.strip()) for p in parts]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergman-exact",
        description="Exact Bergman and polyharmonic projections of polynomials.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="project a polynomial on a domain", allow_abbrev=False)
    p.add_argument("--domain", required=True, help="domain JSON file (or inline JSON)")
    p.add_argument("--poly", required=True, help="polynomial JSON file (or inline JSON)")
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--order", type=int, default=None, help="polyharmonic order m")
    p.add_argument("--no-verify", dest="verify", action="store_false",
                   help="skip the exact orthogonality check")
    p.add_argument("--out", default=None)

    t = sub.add_parser("transport", help="project on a transported domain", allow_abbrev=False)
    t.add_argument("--domain", required=True)
    t.add_argument("--poly", required=True)
    t.add_argument("--out", default=None)

    m = sub.add_parser("member", help="exact membership test", allow_abbrev=False)
    m.add_argument("--domain", required=True)
    m.add_argument("--point", required=True, help='comma-separated, e.g. "131/100,1/2" or "1/2+1/3i"')
    m.add_argument("--out", default=None)

    d = sub.add_parser("dims", help="dimensions of P_N, HP_N and the quotient", allow_abbrev=False)
    d.add_argument("--n", dest="n", type=int, required=True)
    d.add_argument("--N", dest="N", type=int, required=True)
    d.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="check <P - H, e> = 0 for a claimed projection H",
                       allow_abbrev=False)
    v.add_argument("--domain", required=True)
    v.add_argument("--poly", required=True)
    v.add_argument("--projection", required=True)
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--out", default=None)
    return parser


def request_from_args(args: argparse.Namespace) -> Request:
    req = Request(command=args.command)
    if getattr(args, "domain", None) is not None:
        req.domain = domain_from_json(_read_json(args.domain))
    if getattr(args, "poly", None) is not None:
        req.polynomial = poly_from_json(_read_json(args.poly))
    if getattr(args, "projection", None) is not None:
        req.projection = poly_from_json(_read_json(args.projection))
    if getattr(args, "point", None) is not None:
        req.point = _parse_point(args.point)
    req.mode = getattr(args, "mode", "auto")
    req.order = getattr(args, "order", None)
    req.verify = getattr(args, "verify", True)
    req.n = getattr(args, "n", None)
    req.N = getattr(args, "N", None)
    return req


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        response = run(request_from_args(args))
    except BergmanError as exc:
        response = _error(exc.code, str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        response = _error("parse_error", str(exc))
    text = dumps(response)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if response["status"] == "ok":
        return 0
    return EXIT_CODES.get(response["error"]["code"], 1)


if __name__ == "__main__":
    sys.exit(main())
