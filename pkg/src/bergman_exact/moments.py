"""Exact moments, L^2 inner products and the Gram-matrix projection oracle.

All integrals over a fixed domain are rational (or Gaussian-rational) multiples
of the same power of pi, so they are carried as ``PiRational`` values and the
pi factor cancels from every Gram system.

Closed forms used:

* unit ball in R^d:  ``int x^k = prod Gamma((k_i+1)/2) / Gamma(1 + (d+|k|)/2)``
  for all k_i even (else 0), evaluated through double factorials;
* polydisc:  ``int |z^a|^2 = prod pi r_j^(2a_j+2) / (a_j+1)``;
* complex ellipsoid ``sum a_j|z_j|^2 < 1``:
  ``int |z^a|^2 = pi^n a! / ((n+|a|)! prod a_j^(a_j+1))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .domains import COMPLEX_ELLIPSOID, POLYDISC, Ellipsoid, ReinhardtDomain
from .errors import DimensionMismatch, InvalidDomain, MomentUnavailable, SingularGram, SingularMatrix
from .linalg import ExactLU
from .poly import REAL, ZZBAR, Polynomial, compose, conjugate_poly, convert_coords, monomials_upto
from .scalars import ZERO, GaussianRational, gauss


@dataclass(frozen=True)
class PiRational:
    """The exact number ``q * pi**k``."""

    q: GaussianRational
    k: int

    def __post_init__(self):
        object.__setattr__(self, "q", gauss(self.q))
        if self.k < 0:
            raise ValueError("pi exponent must be nonnegative")

    def __add__(self, other: "PiRational") -> "PiRational":
        if not isinstance(other, PiRational):
            return NotImplemented
        if other.k != self.k:
            raise ValueError(f"cannot add q*pi^{self.k} and q*pi^{other.k}")
        return PiRational(self.q + other.q, self.k)

    def __sub__(self, other: "PiRational") -> "PiRational":
        if not isinstance(other, PiRational):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return PiRational(-self.q, self.k)

    def __mul__(self, other):
        if isinstance(other, PiRational):
            return PiRational(self.q * other.q, self.k + other.k)
        return PiRational(self.q * gauss(other), self.k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            if other.k > self.k:
                raise ValueError("quotient would carry a negative power of pi")
            return PiRational(self.q / other.q, self.k - other.k)
        return PiRational(self.q / gauss(other), self.k)

    def is_zero(self) -> bool:
        return not self.q

    def __bool__(self):
        return bool(self.q)

    def __str__(self):
        if not self.q:
            return "0"
        if self.k == 0:
            return str(self.q)
        pi = "pi" if self.k == 1 else f"pi^{self.k}"
        q = str(self.q)
        if self.q.re and self.q.im:
            q = f"({q})"
        return pi if self.q == 1 else f"{q}*{pi}"


def _double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@lru_cache(maxsize=None)
def _ball_moment_q(d: int, k: tuple) -> Fraction:
    if any(e % 2 for e in k):
        return Fraction(0)
    # prod Gamma((k_i+1)/2) = pi^(d/2) * prod (k_i-1)!! / 2^(k_i/2)
    num = Fraction(1)
    for e in k:
        num *= Fraction(_double_factorial(e - 1), 2 ** (e // 2))
    total = d + sum(k)
    if d % 2 == 0:
        # Gamma(1 + total/2) = (total/2)!
        return num / math.factorial(total // 2)
    # Gamma(j + 1/2) = (2j-1)!! sqrt(pi) / 2^j with j = (total+1)/2
    j = (total + 1) // 2
    return num * Fraction(2**j, _double_factorial(2 * j - 1))


def ball_moment(d: int, k: Sequence[int]) -> PiRational:
    """``int_{|u|<1} u^k dV`` over the unit ball of R^d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    k = tuple(k)
    if len(k) != d:
        raise DimensionMismatch(f"multi-index of length {len(k)} in R^{d}")
    return PiRational(_ball_moment_q(d, k), d // 2)


def pi_exponent(domain) -> int:
    if isinstance(domain, Ellipsoid):
        return domain.dim // 2
    if isinstance(domain, ReinhardtDomain):
        return domain.n
    raise MomentUnavailable(f"no moments for {type(domain).__name__}")


def _require_affine(E: Ellipsoid):
    if not E.moment_capable:
        raise MomentUnavailable("ellipsoid was given by its defining polynomial only")


@lru_cache(maxsize=4096)
def _pullback(E: Ellipsoid, p: Polynomial) -> Polynomial:
    """p (in real coordinates) composed with ``u -> S u + c``."""
    if p.kind == ZZBAR:
        p = convert_coords(p, REAL)
    if p.dim != E.dim:
        raise DimensionMismatch(f"polynomial in R^{p.dim} on an ellipsoid in R^{E.dim}")
    identity = all(
        E.affine_matrix[i][j] == (i == j) for i in range(E.dim) for j in range(E.dim)
    ) and not any(E.center)
    return p if identity else compose(p, E.affine_map())


def _integrate_ball(d: int, p: Polynomial) -> GaussianRational:
    total = ZERO
    for key, c in p.terms.items():
        q = _ball_moment_q(d, key)
        if q:
            total = total + c * q
    return total


def _integrate_ball_product(d: int, f: Polynomial, g: Polynomial) -> GaussianRational:
    """``int_ball f * g`` without expanding the product; odd monomials integrate to 0."""
    parity: dict = {}
    for kg, cg in g.terms.items():
        parity.setdefault(tuple(e & 1 for e in kg), []).append((kg, cg))
    total = ZERO
    for kf, cf in f.terms.items():
        for kg, cg in parity.get(tuple(e & 1 for e in kf), ()):
            q = _ball_moment_q(d, tuple(a + b for a, b in zip(kf, kg)))
            total = total + cf * cg * q
    return total


def ellipsoid_moment(E: Ellipsoid, key: Sequence[int]) -> PiRational:
    """``int_E w^key dV`` for an affine-backed ellipsoid (real coordinates)."""
    _require_affine(E)
    mono = Polynomial.monomial(REAL, E.dim, tuple(key))
    return integrate(E, mono)


def reinhardt_moment(R: ReinhardtDomain, alpha: Sequence[int], beta: Sequence[int]) -> PiRational:
    """``int_R z^alpha zbar^beta dV``; zero unless alpha == beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != R.n or len(beta) != R.n:
        raise DimensionMismatch(f"multi-indices must have length {R.n}")
    if alpha != beta:
        return PiRational(ZERO, R.n)
    return PiRational(_reinhardt_norm_q(R, alpha), R.n)


def _reinhardt_norm_q(R: ReinhardtDomain, alpha: tuple) -> Fraction:
    if R.kind == POLYDISC:
        q = Fraction(1)
        for a, rad in zip(alpha, R.params):
            q *= rad ** (2 * a + 2) / (a + 1)
        return q
    if R.kind == COMPLEX_ELLIPSOID:
        q = Fraction(math.prod(math.factorial(a) for a in alpha), math.factorial(R.n + sum(alpha)))
        for a, coef in zip(alpha, R.params):
            q /= coef ** (a + 1)
        return q
    raise InvalidDomain(R.kind)


def _as_zzbar(p: Polynomial, n: int) -> Polynomial:
    if p.kind == REAL:
        p = convert_coords(p, ZZBAR)
    if p.dim != n:
        raise DimensionMismatch(f"polynomial in C^{p.dim} on a domain in C^{n}")
    return p


def integrate(domain, p: Polynomial) -> PiRational:
    """``int_domain p dV``."""
    if isinstance(domain, Ellipsoid):
        _require_affine(domain)
        pulled = _pullback(domain, p)
        return PiRational(_integrate_ball(domain.dim, pulled) * domain.jacobian, domain.dim // 2)
    if isinstance(domain, ReinhardtDomain):
        p = _as_zzbar(p, domain.n)
        n = domain.n
        total = ZERO
        for key, c in p.terms.items():
            if key[:n] == key[n:]:
                total = total + c * _reinhardt_norm_q(domain, key[:n])
        return PiRational(total, n)
    raise MomentUnavailable(f"no moments for {type(domain).__name__}")


def inner_product(domain, f: Polynomial, g: Polynomial) -> PiRational:
    """``<f, g> = int_domain f * conj(g) dV``."""
    if isinstance(domain, Ellipsoid):
        _require_affine(domain)
        fu, gu = _pullback(domain, f), _pullback(domain, g)
        val = _integrate_ball_product(domain.dim, fu, conjugate_poly(gu))
        return PiRational(val * domain.jacobian, domain.dim // 2)
    if isinstance(domain, ReinhardtDomain):
        n = domain.n
        f, g = _as_zzbar(f, n), _as_zzbar(g, n)
        # only diagonal products z^a zbar^a survive, so pair terms directly
        total = ZERO
        gc = conjugate_poly(g).terms
        for kf, cf in f.terms.items():
            af, bf = kf[:n], kf[n:]
            for kg, cg in gc.items():
                ag, bg = kg[:n], kg[n:]
                a = tuple(x + y for x, y in zip(af, ag))
                if a == tuple(x + y for x, y in zip(bf, bg)):
                    total = total + cf * cg * _reinhardt_norm_q(domain, a)
        return PiRational(total, n)
    raise MomentUnavailable(f"no moments for {type(domain).__name__}")


def holomorphic_monomials(n: int, max_degree: int) -> list[Polynomial]:
    """``z^gamma`` for ``|gamma| <= max_degree`` in graded-lex order."""
    return [
        Polynomial.monomial(ZZBAR, n, gamma + (0,) * n) for gamma in monomials_upto(n, max_degree)
    ]


def gram_project(domain, P: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """L^2(domain)-orthogonal projection of P onto span(basis), via the normal equations."""
    basis = list(basis)
    if not basis:
        return Polynomial.zero(P.kind, P.dim)
    size = len(basis)
    rows = []
    for i in range(size):
        row = {}
        for j in range(size):
            v = inner_product(domain, basis[j], basis[i]).q
            if v:
                row[j] = v
        rows.append(row)
    rhs = [inner_product(domain, P, e).q for e in basis]
    try:
        coeffs = ExactLU(size, rows).solve(rhs)
    except SingularMatrix as exc:
        raise SingularGram("Gram matrix is singular: basis is linearly dependent") from exc
    result = Polynomial.zero(basis[0].kind, basis[0].dim)
    for c, e in zip(coeffs, basis):
        if c:
            result = result + e.scale(c)
    return result


def reinhardt_project(R: ReinhardtDomain, P: Polynomial) -> Polynomial:
    """Bergman projection on a Reinhardt domain, monomial by monomial.

    ``z^a zbar^b`` maps to ``(||z^a||^2 / ||z^(a-b)||^2) z^(a-b)`` when b <= a
    componentwise and to 0 otherwise.
    """
    n = R.n
    P = _as_zzbar(P, n)
    out: dict = {}
    for key, c in P.terms.items():
        alpha, beta = key[:n], key[n:]
        if all(a >= b for a, b in zip(alpha, beta)):
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            ratio = _reinhardt_norm_q(R, alpha) / _reinhardt_norm_q(R, gamma)
            k = gamma + (0,) * n
            out[k] = out.get(k, ZERO) + c * ratio
    return Polynomial(ZZBAR, n, out)


@dataclass(frozen=True)
class OrthogonalityReport:
    """Pairings ``<P - H, e>`` against a test basis; verified iff all vanish exactly."""

    pairings: tuple = field(default_factory=tuple)

    @property
    def verified(self) -> bool:
        return all(p.is_zero() for p in self.pairings)


def verify_orthogonality(domain, P: Polynomial, H: Polynomial,
                         test_basis: Sequence[Polynomial] | None = None) -> OrthogonalityReport:
    if test_basis is None:
        if P.kind != ZZBAR:
            raise ValueError("a test basis is required for real-coordinate polynomials")
        test_basis = holomorphic_monomials(P.dim, max(P.degree, H.degree, 0) + 2)
    residual = P - H
    return OrthogonalityReport(tuple(inner_product(domain, residual, e) for e in test_basis))
