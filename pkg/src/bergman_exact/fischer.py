"""Bergman projection of polynomials on ellipsoids in C^n.

For a degree-2 defining polynomial r, the map

    phi(p) = -sum_j d/dz_j ( r * dp/dzbar_j )

does not raise degree and kills holomorphic polynomials, so it acts on the
quotient P_N / HP_N, where it is invertible.  The mixed monomials
``z^a zbar^b`` with ``|b| >= 1`` represent that quotient.  Solving
``phi(Q) = P`` modulo holomorphic terms gives the orthogonal decomposition

    P = phi(Q) + H,    H holomorphic,

and H is the Bergman projection of P: ``phi(Q)`` is the formal adjoint of dbar
applied to the form ``r * dbar Q``, which vanishes on the boundary and is
therefore orthogonal to every square-integrable holomorphic function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .domains import COMPLEX_ELLIPSOID, Ellipsoid, ReinhardtDomain, defining_poly_complex
from .errors import DimensionMismatch, InvalidDomain
from .linalg import ExactLU
from .poly import (
    REAL,
    ZZBAR,
    Form01,
    Polynomial,
    convert_coords,
    dbar,
    monomials_upto,
    wirtinger,
)
from .scalars import ZERO


def dimensions(n: int, N: int) -> tuple[int, int, int]:
    """``(dim P_N, dim HP_N, dim P_N/HP_N)`` on C^n."""
    if n < 1 or N < 0:
        raise ValueError("need n >= 1 and N >= 0")
    full, holo = comb(2 * n + N, 2 * n), comb(n + N, n)
    return full, holo, full - holo


@dataclass(frozen=True)
class QuotientBasis:
    """Mixed monomial keys (``|beta| >= 1``, total degree <= N) in graded-lex order."""

    n: int
    N: int
    keys: tuple

    @property
    def index(self) -> dict:
        return {k: i for i, k in enumerate(self.keys)}

    def __len__(self):
        return len(self.keys)

    def monomial(self, i: int) -> Polynomial:
        return Polynomial.monomial(ZZBAR, self.n, self.keys[i])


def quotient_basis(n: int, N: int) -> QuotientBasis:
    keys = tuple(k for k in monomials_upto(2 * n, N) if any(k[n:]))
    return QuotientBasis(n, N, keys)


def phi_map(r: Polynomial, p: Polynomial) -> Polynomial:
    if r.kind != ZZBAR or p.kind != ZZBAR:
        raise DimensionMismatch("phi acts on zzbar polynomials")
    if r.dim != p.dim:
        raise DimensionMismatch(f"r lives on C^{r.dim}, p on C^{p.dim}")
    if r.degree > 2:
        raise ValueError("defining polynomial must have degree <= 2")
    total = Polynomial.zero(ZZBAR, p.dim)
    for j in range(p.dim):
        total = total + wirtinger(r * wirtinger(p, j, conjugate=True), j)
    return -total


def _phi_columns(r: Polynomial, basis: QuotientBasis) -> list[dict]:
    index = basis.index
    cols = []
    for i in range(len(basis)):
        image = phi_map(r, basis.monomial(i))
        cols.append({index[k]: c for k, c in image.terms.items() if k in index})
    return cols


def build_phi_matrix(r: Polynomial, basis: QuotientBasis) -> list[list]:
    """Matrix of phi on the quotient: column i holds the mixed coefficients of phi(basis[i])."""
    if r.dim != basis.n:
        raise DimensionMismatch("basis and defining polynomial disagree in n")
    size = len(basis)
    A = [[ZERO] * size for _ in range(size)]
    for j, col in enumerate(_phi_columns(r, basis)):
        for i, v in col.items():
            A[i][j] = v
    return A


class FischerSolver:
    """Factorised phi-matrix for a fixed r and degree bound N."""

    def __init__(self, r: Polynomial, N: int):
        self.r = r
        self.basis = quotient_basis(r.dim, N)
        rows: list[dict] = [{} for _ in range(len(self.basis))]
        for j, col in enumerate(_phi_columns(r, self.basis)):
            for i, v in col.items():
                rows[i][j] = v
        if all(v.is_real() for row in rows for v in row.values()):
            # real matrices factor over Q; complex right-hand sides still work
            rows = [{j: v.re for j, v in row.items()} for row in rows]
        self.lu = ExactLU(len(self.basis), rows)

    def solve(self, P: Polynomial) -> Polynomial:
        index = self.basis.index
        rhs = [ZERO] * len(self.basis)
        for k, c in P.terms.items():
            if k in index:
                rhs[index[k]] = c
            elif any(k[P.dim :]):
                raise DimensionMismatch(f"degree of P exceeds N = {self.basis.N}")
        sol = self.lu.solve(rhs)
        return Polynomial(ZZBAR, P.dim, {k: c for k, c in zip(self.basis.keys, sol) if c})


@lru_cache(maxsize=64)
def _solver(r: Polynomial, N: int) -> FischerSolver:
    return FischerSolver(r, N)


@dataclass(frozen=True)
class FischerCertificate:
    """``input = phi(solvent) + projection`` with ``witness = r * dbar(solvent)``."""

    input: Polynomial
    projection: Polynomial
    solvent: Polynomial
    witness: Form01


def solve_exact_quotient(r: Polynomial, P: Polynomial) -> Polynomial:
    """Q with zero holomorphic part such that ``phi(Q) - P`` is holomorphic."""
    if P.degree <= 0:
        return Polynomial.zero(ZZBAR, P.dim)
    return _solver(r, P.degree).solve(P)


def project_with_defining_poly(r: Polynomial, P: Polynomial) -> FischerCertificate:
    if r.kind == REAL:
        r = convert_coords(r, ZZBAR)
    if P.kind == REAL:
        P = convert_coords(P, ZZBAR)
    if r.dim != P.dim:
        raise DimensionMismatch(f"domain in C^{r.dim}, polynomial in C^{P.dim}")
    Q = solve_exact_quotient(r, P)
    H = P - phi_map(r, Q)
    if not H.is_holomorphic():
        raise AssertionError("internal error: residual of the Fischer solve is not holomorphic")
    return FischerCertificate(P, H, Q, dbar(Q) * r)


def bergman_project(domain, P: Polynomial) -> FischerCertificate:
    """Exact Bergman projection of P on an ellipsoid, with its certificate."""
    if isinstance(domain, Ellipsoid):
        r = defining_poly_complex(domain)
    elif isinstance(domain, ReinhardtDomain) and domain.kind == COMPLEX_ELLIPSOID:
        r = domain.defining_poly()
    else:
        raise InvalidDomain(f"the Fischer engine needs an ellipsoid, got {domain!r}")
    return project_with_defining_poly(r, P)
