"""Bergman projections on images of nice domains under polynomial automorphisms.

If ``f: Omega -> V`` is a polynomial biholomorphism with polynomial inverse F,
u = det f' and U = det F', then

    B_V p = U * (B_Omega(u * (p o f)) o F),

so V inherits the polynomials-to-polynomials property from Omega (degrees may
grow).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .domains import Ellipsoid, ReinhardtDomain
from .errors import DimensionMismatch, InvalidDomain, InvalidPair
from .fischer import bergman_project
from .moments import reinhardt_project
from .poly import ZZBAR, Polynomial, compose, convert_coords, wirtinger, z


def _permutation_parity(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def jacobian_determinant(f: Sequence[Polynomial]) -> Polynomial:
    """Complex Jacobian determinant ``det(d f_i / d z_j)`` of a holomorphic map."""
    n = len(f)
    J = [[wirtinger(fi, j) for j in range(n)] for fi in f]
    det = Polynomial.zero(ZZBAR, n)
    for perm in permutations(range(n)):
        term = Polynomial.constant(ZZBAR, n, _permutation_parity(perm))
        for i, j in enumerate(perm):
            term = term * J[i][j]
            if term.is_zero():
                break
        det = det + term
    return det


def _check_map(f: Sequence[Polynomial], name: str) -> list[Polynomial]:
    f = [convert_coords(c, ZZBAR) if c.kind != ZZBAR else c for c in f]
    n = len(f)
    if n == 0:
        raise DimensionMismatch(f"map {name} has no components")
    for c in f:
        if c.dim != n:
            raise DimensionMismatch(f"map {name}: component on C^{c.dim}, expected C^{n}")
        if not c.is_holomorphic():
            raise InvalidPair(f"{name} holomorphic", f"map {name} is not holomorphic")
    return f


@dataclass(frozen=True)
class BiholoPair:
    n: int
    f: tuple
    F: tuple
    u: Polynomial
    U: Polynomial

    def forward(self, point: Sequence):
        return [c.evaluate(point) for c in self.f]

    def inverse(self, point: Sequence):
        return [c.evaluate(point) for c in self.F]


def validate_pair(f: Sequence[Polynomial], F: Sequence[Polynomial]) -> BiholoPair:
    """Check ``f o F = id``, ``F o f = id`` and ``(u o F) U = 1`` exactly."""
    f, F = _check_map(f, "f"), _check_map(F, "F")
    if len(f) != len(F):
        raise DimensionMismatch("f and F have different numbers of components")
    n = len(f)
    ident = [z(j, n) for j in range(n)]
    if [compose(c, F) for c in f] != ident:
        raise InvalidPair("f o F = id")
    if [compose(c, f) for c in F] != ident:
        raise InvalidPair("F o f = id")
    u, U = jacobian_determinant(f), jacobian_determinant(F)
    if compose(u, F) * U != Polynomial.constant(ZZBAR, n, 1):
        raise InvalidPair("(u o F) * U = 1")
    return BiholoPair(n, tuple(f), tuple(F), u, U)


@dataclass(frozen=True)
class TransportedDomain:
    """The image ``V = f(source)``; membership is decided by pulling back through F."""

    source: object
    pair: BiholoPair

    def __post_init__(self):
        src_n = self.source.n
        if src_n != self.pair.n:
            raise DimensionMismatch(f"source lives in C^{src_n}, maps in C^{self.pair.n}")

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def moment_capable(self) -> bool:
        return False

    def preimage(self, point: Sequence):
        if len(point) != self.n:
            raise DimensionMismatch(f"point of length {len(point)} for a domain in C^{self.n}")
        return self.pair.inverse(point)

    def contains(self, point: Sequence) -> bool:
        return self.source.contains(self.preimage(point))


def _source_projection(source, g: Polynomial) -> Polynomial:
    if isinstance(source, ReinhardtDomain):
        return reinhardt_project(source, g)
    if isinstance(source, Ellipsoid):
        return bergman_project(source, g).projection
    raise InvalidDomain(f"no projection engine for {type(source).__name__}")


def transport_project(domain: TransportedDomain, p: Polynomial) -> Polynomial:
    """``B_V p = U * (B_source(u * (p o f)) o F)``."""
    if p.kind != ZZBAR:
        p = convert_coords(p, ZZBAR)
    pair = domain.pair
    if p.dim != pair.n:
        raise DimensionMismatch(f"polynomial on C^{p.dim}, domain in C^{pair.n}")
    pulled = pair.u * compose(p, pair.f)
    projected = _source_projection(domain.source, pulled)
    return pair.U * compose(projected, pair.F)

