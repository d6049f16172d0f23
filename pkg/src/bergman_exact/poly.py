"""Sparse multivariate polynomials with exact Gaussian-rational coefficients.

Two coordinate kinds are supported:

``zzbar`` (n complex variables)
    Monomials ``z^alpha * zbar^beta``.  Keys are stored flat as the
    concatenation ``alpha + beta`` (length 2n).
``real`` (d real variables)
    Monomials ``x^kappa``; keys have length d.  When d = 2n the variables are
    ordered ``(x_1, ..., x_n, y_1, ..., y_n)`` with ``z_j = x_j + i y_j``.

Monomials are ordered graded-lexicographically on the flat key (total degree
first, then lexicographic with the first coordinate most significant).  That
order fixes every basis enumeration in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionMismatch, ParseError
from .scalars import (
    ONE,
    ZERO,
    GaussianRational,
    format_rational,
    gauss,
    parse_rational,
)

ZZBAR = "zzbar"
REAL = "real"
KINDS = (ZZBAR, REAL)

Key = tuple


def order_key(key: Key):
    """Sort key realising the graded-lex monomial order (ascending)."""
    return (sum(key), key)


def exponents(nvars: int, degree: int) -> Iterator[Key]:
    """All exponent tuples of exactly ``degree`` in ``nvars`` variables, ascending."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree + 1):
        for rest in exponents(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_upto(nvars: int, max_degree: int) -> list[Key]:
    """Exponent tuples of total degree <= ``max_degree`` in graded-lex order."""
    out: list[Key] = []
    for deg in range(max_degree + 1):
        out.extend(exponents(nvars, deg))
    return out


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` maps exponent keys to coefficients; zero coefficients are never
    stored.  For the ``zzbar`` kind a key may be given either flat or as an
    ``(alpha, beta)`` pair.
    """

    __slots__ = ("kind", "dim", "_terms", "_hash")

    def __init__(self, kind: str, dim: int, terms: Mapping | Iterable = ()):
        if kind not in KINDS:
            raise ValueError(f"unknown coordinate kind {kind!r}")
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.kind = kind
        self.dim = dim
        width = 2 * dim if kind == ZZBAR else dim
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for key, coeff in items:
            key = _flatten_key(kind, key)
            if len(key) != width or any(e < 0 for e in key):
                raise DimensionMismatch(f"bad exponent key {key} for {kind}({dim})")
            c = gauss(coeff)
            if key in clean:
                c = clean[key] + c
            clean[key] = c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, kind: str, dim: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already normalized
        obj = object.__new__(cls)
        obj.kind = kind
        obj.dim = dim
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, kind: str, dim: int) -> "Polynomial":
        return cls._raw(kind, dim, {})

    @classmethod
    def constant(cls, kind: str, dim: int, value) -> "Polynomial":
        c = gauss(value)
        width = 2 * dim if kind == ZZBAR else dim
        return cls._raw(kind, dim, {(0,) * width: c} if c else {})

    @classmethod
    def monomial(cls, kind: str, dim: int, key, coeff=1) -> "Polynomial":
        return cls(kind, dim, {key: coeff})

    # -- basic structure ------------------------------------------------------

    @property
    def nvars(self) -> int:
        """Length of an exponent key (2n for zzbar, d for real)."""
        return 2 * self.dim if self.kind == ZZBAR else self.dim

    @property
    def terms(self) -> Mapping[Key, GaussianRational]:
        return dict(self._terms)

    def items(self) -> list[tuple[Key, GaussianRational]]:
        """Terms in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: order_key(kv[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def coeff(self, key) -> GaussianRational:
        return self._terms.get(_flatten_key(self.kind, key), ZERO)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(k) for k in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_holomorphic(self) -> bool:
        if self.kind != ZZBAR:
            raise DimensionMismatch("holomorphy is defined for zzbar polynomials")
        n = self.dim
        return all(not any(k[n:]) for k in self._terms)

    def has_real_coefficients(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def split(self, key: Key) -> tuple[Key, Key]:
        """``(alpha, beta)`` halves of a flat zzbar key."""
        return key[: self.dim], key[self.dim :]

    def leading(self) -> tuple[Key, GaussianRational]:
        key = max(self._terms, key=order_key)
        return key, self._terms[key]

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial._raw(
            self.kind, self.dim, {k: c for k, c in self._terms.items() if sum(k) == degree}
        )

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.kind != other.kind or self.dim != other.dim:
            raise DimensionMismatch(
                f"{self.kind}({self.dim}) vs {other.kind}({other.dim})"
            )

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.kind, self.dim, other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial._raw(self.kind, self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.kind, self.dim, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = gauss(c)
        if not c:
            return Polynomial.zero(self.kind, self.dim)
        return Polynomial._raw(self.kind, self.dim, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        get = out.get
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = tuple(map(_add, ka, kb))
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return Polynomial._raw(self.kind, self.dim, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        return self.scale(ONE / gauss(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(self.kind, self.dim, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.kind == other.kind and self.dim == other.dim and self._terms == other._terms
        try:
            return self == Polynomial.constant(self.kind, self.dim, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, self.dim, frozenset(self._terms.items())))
        return self._hash

    def conjugate(self) -> "Polynomial":
        return conjugate_poly(self)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, point: Sequence) -> GaussianRational:
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> GaussianRational:
        """Exact value at a point (n complex values for zzbar, d values for real)."""
        if len(point) != self.dim:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.dim}")
        vals = [gauss(v) for v in point]
        if self.kind == ZZBAR:
            vals = vals + [v.conjugate() for v in vals]
        total = ZERO
        for key, c in self._terms.items():
            term = c
            for v, e in zip(vals, key):
                if e:
                    term = term * v**e
            total = total + term
        return total

    # -- printing -------------------------------------------------------------

    def _names(self) -> list[str]:
        if self.kind == ZZBAR:
            if self.dim == 1:
                return ["z", "zbar"]
            return [f"z{j + 1}" for j in range(self.dim)] + [f"zbar{j + 1}" for j in range(self.dim)]
        if self.dim == 1:
            return ["x"]
        return [f"x{j + 1}" for j in range(self.dim)]

    def __str__(self):
        if not self._terms:
            return "0"
        names = self._names()
        parts = []
        for key, c in reversed(self.items()):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, key) if e
            )
            coeff = str(c)
            if c.re and c.im:
                coeff = f"({coeff})"
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.kind}, {self.dim}: {self})"


def _flatten_key(kind: str, key) -> Key:
    key = tuple(key)
    if kind == ZZBAR and len(key) == 2 and all(isinstance(h, (tuple, list)) for h in key):
        return tuple(key[0]) + tuple(key[1])
    return tuple(int(e) for e in key)


# -- variables --------------------------------------------------------------


def z(j: int, n: int) -> Polynomial:
    """The coordinate function ``z_j`` (0-based index) on C^n."""
    _check_index(j, n)
    key = [0] * (2 * n)
    key[j] = 1
    return Polynomial._raw(ZZBAR, n, {tuple(key): ONE})


def zbar(j: int, n: int) -> Polynomial:
    _check_index(j, n)
    key = [0] * (2 * n)
    key[n + j] = 1
    return Polynomial._raw(ZZBAR, n, {tuple(key): ONE})


def x(j: int, d: int) -> Polynomial:
    """The real coordinate ``x_j`` (0-based) on R^d."""
    _check_index(j, d)
    key = [0] * d
    key[j] = 1
    return Polynomial._raw(REAL, d, {tuple(key): ONE})


def _check_index(j: int, n: int):
    if not 0 <= j < n:
        raise IndexError(f"coordinate index {j} out of range for {n} variables")


# -- the operations ---------------------------------------------------------


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def _partial_index(p: Polynomial, i: int) -> Polynomial:
    out = {}
    for key, c in p._terms.items():
        e = key[i]
        if e:
            k = key[:i] + (e - 1,) + key[i + 1 :]
            out[k] = c * e
    return Polynomial._raw(p.kind, p.dim, out)


def wirtinger(p: Polynomial, j: int, conjugate: bool = False) -> Polynomial:
    """Formal derivative d/dz_j (or d/dzbar_j) treating z and zbar as independent."""
    if p.kind != ZZBAR:
        raise DimensionMismatch("Wirtinger derivatives need a zzbar polynomial")
    _check_index(j, p.dim)
    return _partial_index(p, p.dim + j if conjugate else j)


def partial(p: Polynomial, i: int) -> Polynomial:
    """Partial derivative with respect to the i-th key variable."""
    _check_index(i, p.nvars)
    return _partial_index(p, i)


def laplacian(p: Polynomial) -> Polynomial:
    """Euclidean Laplacian.  For zzbar polynomials this is 4 * sum_j d^2/dz_j dzbar_j."""
    if p.kind == ZZBAR:
        total = Polynomial.zero(ZZBAR, p.dim)
        for j in range(p.dim):
            total = total + wirtinger(wirtinger(p, j, conjugate=True), j)
        return total.scale(4)
    total = Polynomial.zero(REAL, p.dim)
    for i in range(p.dim):
        total = total + _partial_index(_partial_index(p, i), i)
    return total


def laplacian_power(p: Polynomial, m: int) -> Polynomial:
    if m < 0:
        raise ValueError("Laplacian power must be nonnegative")
    for _ in range(m):
        if p.is_zero():
            break
        p = laplacian(p)
    return p


def conjugate_poly(p: Polynomial) -> Polynomial:
    """Complex conjugate of the function p.

    For zzbar polynomials the alpha and beta halves swap; for real-coordinate
    polynomials only the coefficients are conjugated.
    """
    if p.kind == REAL:
        return Polynomial._raw(REAL, p.dim, {k: c.conjugate() for k, c in p._terms.items()})
    n = p.dim
    return Polynomial._raw(
        ZZBAR, n, {k[n:] + k[:n]: c.conjugate() for k, c in p._terms.items()}
    )


def compose(p: Polynomial, maps: Sequence[Polynomial]) -> Polynomial:
    """Substitute ``maps`` into p.

    For zzbar p, ``z_j <- maps[j]`` and ``zbar_j <- conj(maps[j])``.  For real p
    the substitution is componentwise and ``maps`` may be of either kind.
    """
    maps = list(maps)
    if len(maps) != p.dim:
        raise DimensionMismatch(f"map has {len(maps)} components, polynomial needs {p.dim}")
    if not maps:
        return p
    kind, dim = maps[0].kind, maps[0].dim
    for m in maps:
        if m.kind != kind or m.dim != dim:
            raise DimensionMismatch("map components disagree in coordinate kind")
    if p.kind == ZZBAR:
        subs = maps + [conjugate_poly(m) for m in maps]
    else:
        subs = maps
    powers: list[list[Polynomial]] = [[Polynomial.constant(kind, dim, 1)] for _ in subs]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * subs[i])
        return cache[e]

    acc: dict = {}
    for key, c in p._terms.items():
        term = Polynomial.constant(kind, dim, c)
        for i, e in enumerate(key):
            if e:
                term = term * power(i, e)
        for k, v in term._terms.items():
            w = acc.get(k)
            acc[k] = v if w is None else w + v
    return Polynomial._raw(kind, dim, {k: v for k, v in acc.items() if v})


def convert_coords(p: Polynomial, target: str) -> Polynomial:
    """Rewrite p between ``real(2n)`` and ``zzbar(n)`` coordinates."""
    if target not in KINDS:
        raise ValueError(f"unknown coordinate kind {target!r}")
    if p.kind == target:
        return p
    if target == ZZBAR:
        if p.dim % 2:
            raise DimensionMismatch(f"real dimension {p.dim} is odd; cannot pair into C^n")
        n = p.dim // 2
        half = Fraction(1, 2)
        xs = [(z(j, n) + zbar(j, n)).scale(half) for j in range(n)]
        ys = [(z(j, n) - zbar(j, n)).scale(GaussianRational(0, -half)) for j in range(n)]
        return compose(p, xs + ys)
    n = p.dim
    i = GaussianRational(0, 1)
    zs = [x(j, 2 * n) + x(n + j, 2 * n).scale(i) for j in range(n)]
    return compose(p, zs)


def divmod_poly(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division of a by a single divisor b in the graded-lex order.

    The remainder is zero exactly when b divides a.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lead_k, lead_c = b.leading()
    inv = ONE / lead_c
    work = dict(a._terms)
    quot: dict = {}
    rem: dict = {}
    while work:
        k = max(work, key=order_key)
        c = work[k]
        if all(e >= f for e, f in zip(k, lead_k)):
            shift = tuple(e - f for e, f in zip(k, lead_k))
            factor = c * inv
            quot[shift] = quot.get(shift, ZERO) + factor
            for bk, bc in b._terms.items():
                kk = tuple(map(_add, bk, shift))
                v = work.get(kk, ZERO) - factor * bc
                if v:
                    work[kk] = v
                else:
                    work.pop(kk, None)
        else:
            rem[k] = c
            del work[k]
    return (
        Polynomial._raw(a.kind, a.dim, {k: v for k, v in quot.items() if v}),
        Polynomial._raw(a.kind, a.dim, rem),
    )


def divides(b: Polynomial, a: Polynomial) -> bool:
    return divmod_poly(a, b)[1].is_zero()


@dataclass(frozen=True)
class Form01:
    """A (0,1)-form sum_j components[j] dzbar_j with polynomial coefficients."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            return
        n = comps[0].dim
        for c in comps:
            if c.kind != ZZBAR or c.dim != n:
                raise DimensionMismatch("form components must be zzbar polynomials in C^n")
        if len(comps) != n:
            raise DimensionMismatch(f"{len(comps)} components for C^{n}")

    @property
    def n(self) -> int:
        return len(self.components)

    def __mul__(self, other: Polynomial) -> "Form01":
        return Form01(tuple(c * other for c in self.components))

    __rmul__ = __mul__


def dbar(p: Polynomial) -> Form01:
    return Form01(tuple(wirtinger(p, j, conjugate=True) for j in range(p.dim)))


# -- JSON -------------------------------------------------------------------


def poly_to_json(p: Polynomial) -> dict:
    terms = []
    for key, c in p.items():
        if p.kind == ZZBAR:
            alpha, beta = p.split(key)
            t = {"alpha": list(alpha), "beta": list(beta)}
        else:
            t = {"alpha": list(key)}
        t["re"] = format_rational(c.re)
        t["im"] = format_rational(c.im)
        terms.append(t)
    return {"vars": p.kind, "n": p.dim, "terms": terms}


def poly_from_json(obj) -> Polynomial:
    if not isinstance(obj, dict):
        raise ParseError("polynomial JSON must be an object")
    kind = obj.get("vars")
    if kind not in KINDS:
        raise ParseError(f"'vars' must be one of {KINDS}, got {kind!r}")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"'n' must be a nonnegative integer, got {n!r}")
    raw_terms = obj.get("terms", [])
    if not isinstance(raw_terms, list):
        raise ParseError("'terms' must be a list")
    items = []
    for t in raw_terms:
        if not isinstance(t, dict) or "alpha" not in t:
            raise ParseError(f"malformed term {t!r}")
        alpha = _index_list(t["alpha"], n)
        if kind == ZZBAR:
            beta = _index_list(t.get("beta", [0] * n), n)
            key = alpha + beta
        else:
            if "beta" in t:
                raise ParseError("real-coordinate terms carry no 'beta'")
            key = alpha
        coeff = GaussianRational(parse_rational(t.get("re", "0")), parse_rational(t.get("im", "0")))
        items.append((key, coeff))
    return Polynomial(kind, n, items)


def _index_list(v, n: int) -> tuple:
    if (
        not isinstance(v, list)
        or len(v) != n
        or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in v)
    ):
        raise ParseError(f"multi-index {v!r} must be {n} nonnegative integers")
    return tuple(v)


def random_polynomial(rng, kind: str, dim: int, degree: int, density: float = 1.0,
                      complex_coeffs: bool = True, max_num: int = 9, max_den: int = 5) -> Polynomial:
    """Pseudo-random polynomial of total degree <= ``degree`` with small rational coefficients.

    ``rng`` is a ``random.Random``; the top-degree part is forced nonzero.
    """
    width = 2 * dim if kind == ZZBAR else dim

    def coefficient():
        re = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        im = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) if complex_coeffs else 0
        return GaussianRational(re, im)

    terms = {}
    for key in monomials_upto(width, degree):
        if rng.random() < density:
            terms[key] = coefficient()
    top = list(exponents(width, degree))
    if degree >= 0 and top and not any(terms.get(k) for k in top):
        terms[rng.choice(top)] = GaussianRational(rng.choice([-3, -2, -1, 1, 2, 3]), 0)
    return Polynomial(kind, dim, terms)


__all__ = [
    "ZZBAR", "REAL", "Polynomial", "Form01", "order_key", "exponents", "monomials_upto",
    "z", "zbar", "x", "poly_arith", "wirtinger", "partial", "laplacian", "laplacian_power",
    "conjugate_poly", "compose", "convert_coords", "divmod_poly", "divides", "dbar",
    "poly_to_json", "poly_from_json", "random_polynomial",
]
