"""Orthogonal projection onto polyharmonic polynomials on real ellipsoids.

The class of p in P_N modulo ker(Lap^m) is represented faithfully by
``Lap^m p`` in P_{N-2m}.  In that chart the Fischer-type map
``p -> Lap^m(r^{2m} Lap^m p)`` becomes

    psi(q) = Lap^{2m}(r^{2m} q)      on P_{N-2m},

which is invertible.  Solving ``psi(q) = Lap^m P`` and setting
``h = P - Lap^m(r^{2m} q)`` gives ``Lap^m h = 0``; the removed part is
orthogonal to every polyharmonic function because ``r^{2m} q`` vanishes to
order 2m on the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .domains import Ellipsoid
from .errors import DimensionMismatch
from .linalg import ExactLU, nullspace, rank
from .poly import REAL, ZZBAR, Polynomial, convert_coords, laplacian_power, monomials_upto
from .scalars import ZERO


@dataclass(frozen=True)
class PolyharmonicCertificate:
    """``input = witness + projection`` with ``witness = Lap^m(r^{2m} reduced_solvent)``."""

    input: Polynomial
    order: int
    projection: Polynomial
    reduced_solvent: Polynomial
    witness: Polynomial


def psi_map(r: Polynomial, m: int, q: Polynomial) -> Polynomial:
    if m < 1:
        raise ValueError("order m must be positive")
    if r.kind != q.kind or r.dim != q.dim:
        raise DimensionMismatch("r and q must share coordinates")
    if q.is_zero():
        return q
    return laplacian_power(r ** (2 * m) * q, 2 * m)


def laplacian_matrix(d: int, m: int, N: int) -> list[list[Fraction]]:
    """Matrix of ``Lap^m : P_N -> P_{N-2m}`` in the graded-lex monomial bases."""
    cols = monomials_upto(d, N)
    rows = monomials_upto(d, N - 2 * m) if N >= 2 * m else []
    index = {k: i for i, k in enumerate(rows)}
    A = [[Fraction(0)] * len(cols) for _ in rows]
    for j, key in enumerate(cols):
        image = laplacian_power(Polynomial.monomial(REAL, d, key), m)
        for k, c in image.terms.items():
            A[index[k]][j] = c.re
    return A


def polyharmonic_basis(d: int, m: int, N: int) -> list[Polynomial]:
    """A basis of ``{p in P_N : Lap^m p = 0}`` from the exact null space of Lap^m."""
    if d < 1 or m < 1 or N < 0:
        raise ValueError("need d >= 1, m >= 1, N >= 0")
    cols = monomials_upto(d, N)
    A = laplacian_matrix(d, m, N)
    vectors = nullspace(A, ncols=len(cols))
    return [
        Polynomial(REAL, d, {k: v for k, v in zip(cols, vec) if v}) for vec in vectors
    ]


def laplacian_rank(d: int, m: int, N: int) -> int:
    return rank(laplacian_matrix(d, m, N))


class PsiSolver:
    def __init__(self, r: Polynomial, m: int, M: int):
        self.r, self.m = r, m
        self.keys = monomials_upto(r.dim, M)
        index = {k: i for i, k in enumerate(self.keys)}
        rows: list[dict] = [{} for _ in self.keys]
        for j, key in enumerate(self.keys):
            image = psi_map(r, m, Polynomial.monomial(REAL, r.dim, key))
            for k, c in image.terms.items():
                rows[index[k]][j] = c.re if c.is_real() else c
        self.lu = ExactLU(len(self.keys), rows)
        self._index = index

    def solve(self, target: Polynomial) -> Polynomial:
        rhs = [ZERO] * len(self.keys)
        for k, c in target.terms.items():
            rhs[self._index[k]] = c
        sol = self.lu.solve(rhs)
        return Polynomial(REAL, self.r.dim, {k: c for k, c in zip(self.keys, sol) if c})


@lru_cache(maxsize=64)
def _solver(r: Polynomial, m: int, M: int) -> PsiSolver:
    return PsiSolver(r, m, M)


def project_with_defining_poly(r: Polynomial, m: int, P: Polynomial) -> PolyharmonicCertificate:
    if m < 1:
        raise ValueError("order m must be positive")
    if P.kind == ZZBAR:
        P = convert_coords(P, REAL)
    if r.kind != REAL or r.dim != P.dim:
        raise DimensionMismatch(f"domain in R^{r.dim}, polynomial in R^{P.dim}")
    N = P.degree
    zero = Polynomial.zero(REAL, P.dim)
    if N < 2 * m:
        return PolyharmonicCertificate(P, m, P, zero, zero)
    q = _solver(r, m, N - 2 * m).solve(laplacian_power(P, m))
    witness = laplacian_power(r ** (2 * m) * q, m)
    return PolyharmonicCertificate(P, m, P - witness, q, witness)


def polyharmonic_project(E: Ellipsoid, m: int, P: Polynomial) -> PolyharmonicCertificate:
    """Projection of P onto order-m polyharmonic functions in L^2(E), exactly."""
    return project_with_defining_poly(E.defining_poly, m, P)
