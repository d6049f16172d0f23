"""Ellipsoids and Reinhardt domains.

An ellipsoid is normally built as the image ``w = S u + c`` of the unit ball, so
its defining polynomial ``r(w) = |S^{-1}(w - c)|^2 - 1`` has rational
coefficients and its monomial moments are exactly computable.  An ellipsoid can
also be given by a raw degree-2 ``r``; such an ellipsoid supports projection but
not moment computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InvalidDomain
from .linalg import determinant, solve_exact
from .poly import REAL, ZZBAR, Polynomial, convert_coords, x, z, zbar
from .scalars import GaussianRational, gauss

POLYDISC = "polydisc"
COMPLEX_ELLIPSOID = "complexEllipsoid"


def _fraction(v) -> Fraction:
    if isinstance(v, GaussianRational):
        if v.im:
            raise InvalidDomain(f"expected a real rational, got {v}")
        return v.re
    if isinstance(v, float):
        raise InvalidDomain("floating-point entries are not allowed")
    return Fraction(v)


@dataclass(frozen=True)
class Ellipsoid:
    """Ellipsoid in R^d (C^n when d = 2n) with real defining polynomial ``r < 0`` inside."""

    dim: int
    defining_poly: Polynomial
    affine_matrix: tuple | None = None
    center: tuple | None = None

    @property
    def moment_capable(self) -> bool:
        return self.affine_matrix is not None

    @property
    def n(self) -> int:
        if self.dim % 2:
            raise DimensionMismatch(f"real dimension {self.dim} is not even")
        return self.dim // 2

    @property
    def jacobian(self) -> Fraction:
        """``|det S|``, the volume ratio to the unit ball."""
        if self.affine_matrix is None:
            raise InvalidDomain("ellipsoid has no affine representation")
        return abs(_fraction(determinant([list(row) for row in self.affine_matrix])))

    def affine_map(self) -> list[Polynomial]:
        """Components of ``u -> S u + c`` as real polynomials in u."""
        if self.affine_matrix is None:
            raise InvalidDomain("ellipsoid has no affine representation")
        d = self.dim
        comps = []
        for i in range(d):
            comp = Polynomial.constant(REAL, d, self.center[i])
            for j in range(d):
                if self.affine_matrix[i][j]:
                    comp = comp + x(j, d).scale(self.affine_matrix[i][j])
            comps.append(comp)
        return comps

    def complex_defining_poly(self) -> Polynomial:
        return defining_poly_complex(self)

    def real_point(self, point: Sequence) -> list[Fraction]:
        """Normalise a point to real coordinates: d reals, or d/2 complex numbers."""
        pts = [gauss(v) for v in point]
        if len(pts) == self.dim:
            if any(p.im for p in pts):
                raise DimensionMismatch(
                    f"{self.dim} coordinates given: expected real coordinates"
                )
            return [p.re for p in pts]
        if self.dim % 2 == 0 and len(pts) == self.dim // 2:
            return [p.re for p in pts] + [p.im for p in pts]
        raise DimensionMismatch(f"point of length {len(pts)} for an ellipsoid in R^{self.dim}")

    def contains(self, point: Sequence) -> bool:
        value = self.defining_poly.evaluate(self.real_point(point))
        return value.re < 0


def ellipsoid_from_affine(S: Sequence[Sequence], c: Sequence | None = None) -> Ellipsoid:
    """Ellipsoid ``{S u + c : |u| < 1}`` for a rational invertible S."""
    S = [[_fraction(v) for v in row] for row in S]
    d = len(S)
    if d == 0 or any(len(row) != d for row in S):
        raise InvalidDomain("affine matrix must be square and nonempty")
    c = [Fraction(0)] * d if c is None else [_fraction(v) for v in c]
    if len(c) != d:
        raise DimensionMismatch("center length does not match the matrix")
    if determinant(S) == 0:
        raise InvalidDomain("affine matrix is singular")
    inv_cols = [solve_exact(S, [Fraction(int(i == j)) for i in range(d)]) for j in range(d)]
    inv = [[inv_cols[j][i] for j in range(d)] for i in range(d)]
    shifted = [x(j, d) - c[j] for j in range(d)]
    r = Polynomial.constant(REAL, d, -1)
    for i in range(d):
        lin = Polynomial.zero(REAL, d)
        for j in range(d):
            if inv[i][j]:
                lin = lin + shifted[j].scale(inv[i][j])
        r = r + lin * lin
    return Ellipsoid(d, r, tuple(tuple(row) for row in S), tuple(c))


def unit_ball(d: int) -> Ellipsoid:
    return ellipsoid_from_affine([[int(i == j) for j in range(d)] for i in range(d)])


def ellipsoid_from_poly(r: Polynomial) -> Ellipsoid:
    """Ellipsoid ``{r < 0}`` from a raw degree-2 real-valued polynomial.

    The quadratic part must be positive definite and r must be negative at its
    critical point, so the sublevel set is a genuine nonempty ellipsoid.  The
    result is not moment-capable.
    """
    if r.kind == ZZBAR:
        if r != r.conjugate():
            raise InvalidDomain("defining polynomial is not real-valued")
        r = convert_coords(r, REAL)
    if not r.has_real_coefficients():
        raise InvalidDomain("defining polynomial is not real-valued")
    if r.degree != 2:
        raise InvalidDomain(f"defining polynomial has degree {r.degree}, expected 2")
    d = r.dim
    A = [[Fraction(0)] * d for _ in range(d)]
    b = [Fraction(0)] * d
    for key, coeff in r.terms.items():
        idx = [i for i, e in enumerate(key) for _ in range(e)]
        if len(idx) == 2:
            i, j = idx
            if i == j:
                A[i][i] += coeff.re
            else:
                A[i][j] += coeff.re / 2
                A[j][i] += coeff.re / 2
        elif len(idx) == 1:
            b[idx[0]] += coeff.re
    for k in range(1, d + 1):
        if determinant([row[:k] for row in A[:k]]) <= 0:
            raise InvalidDomain("quadratic part of r is not positive definite")
    center = solve_exact(A, [-v / 2 for v in b])
    if r.evaluate(center).re >= 0:
        raise InvalidDomain("r is nonnegative everywhere: empty domain")
    return Ellipsoid(d, r, None, tuple(center))


def defining_poly_complex(E: Ellipsoid) -> Polynomial:
    if E.dim % 2:
        raise DimensionMismatch(f"ellipsoid in odd dimension {E.dim} has no complex form")
    return convert_coords(E.defining_poly, ZZBAR)


@dataclass(frozen=True)
class ReinhardtDomain:
    """Polydisc (``params`` = radii) or complex ellipsoid ``sum a_j |z_j|^2 < 1``."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in (POLYDISC, COMPLEX_ELLIPSOID):
            raise InvalidDomain(f"unknown Reinhardt domain kind {self.kind!r}")
        params = tuple(_fraction(p) for p in self.params)
        if not params:
            raise InvalidDomain("need at least one coordinate")
        if any(p <= 0 for p in params):
            raise InvalidDomain("Reinhardt parameters must be strictly positive")
        object.__setattr__(self, "params", params)

    @property
    def n(self) -> int:
        return len(self.params)

    @property
    def moment_capable(self) -> bool:
        return True

    def defining_poly(self) -> Polynomial:
        if self.kind != COMPLEX_ELLIPSOID:
            raise InvalidDomain("a polydisc has no single quadric defining polynomial")
        n = self.n
        r = Polynomial.constant(ZZBAR, n, -1)
        for j, a in enumerate(self.params):
            r = r + (z(j, n) * zbar(j, n)).scale(a)
        return r

    def as_ellipsoid(self) -> Ellipsoid:
        """The complex ellipsoid as a raw-r Ellipsoid (projection only, no moments)."""
        return ellipsoid_from_poly(self.defining_poly())

    def contains(self, point: Sequence) -> bool:
        pts = [gauss(v) for v in point]
        if len(pts) != self.n:
            raise DimensionMismatch(f"point of length {len(pts)} for a domain in C^{self.n}")
        if self.kind == POLYDISC:
            return all(p.norm() < rad * rad for p, rad in zip(pts, self.params))
        return sum((a * p.norm() for a, p in zip(self.params, pts)), Fraction(0)) < 1


def polydisc(radii: Sequence) -> ReinhardtDomain:
    return ReinhardtDomain(POLYDISC, tuple(radii))


def complex_ellipsoid(a: Sequence) -> ReinhardtDomain:
    return ReinhardtDomain(COMPLEX_ELLIPSOID, tuple(a))


def contains(domain, point: Sequence) -> bool:
    """Exact membership test for any supported domain (including transported ones)."""
    return domain.contains(point)
