"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import ParseError

Rational = Fraction
Scalar = Union[int, Fraction, "GaussianRational"]

_ZERO = Fraction(0)


class GaussianRational:
    """Complex number ``re + i*im`` with both parts in Q.

    Instances are immutable and hash equal to the matching ``Fraction`` when the
    imaginary part vanishes, so ``GaussianRational(3) == 3`` behaves as expected.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if type(value) is cls:
            return value
        if isinstance(value, (int, _RationalABC)):
            return _make(Fraction(value), _ZERO)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        if not self.im:
            return self
        return _make(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|self|**2``, always rational."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return _make(-self.re, -self.im if self.im else _ZERO)

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.im and not other.im:
            return _make(self.re + other.re, _ZERO)
        return _make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.im and not other.im:
            return _make(self.re - other.re, _ZERO)
        return _make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, _RationalABC)):
                return _make(self.re * other, self.im * other if self.im else _ZERO)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _make(a * c, _ZERO)
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, (int, _RationalABC)):
                if not other:
                    raise ZeroDivisionError("GaussianRational division by zero")
                return _make(self.re / other, self.im / other)
            return NotImplemented
        if not other.im:
            return self / other.re
        den = other.norm()
        if not den:
            raise ZeroDivisionError("GaussianRational division by zero")
        a, b, c, d = self.re, self.im, other.re, other.im
        return _make((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_gaussian(self)


def _make(re: Fraction, im: Fraction) -> GaussianRational:
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    return obj


ZERO = _make(Fraction(0), Fraction(0))
ONE = _make(Fraction(1), Fraction(0))
I = _make(Fraction(0), Fraction(1))


def gauss(value) -> GaussianRational:
    return GaussianRational.coerce(value)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` (or an int) into a Fraction.  Floats are rejected."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"rationals must be strings 'p/q' or ints, got {text!r}")
    if not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", text):
        raise ParseError(f"malformed rational {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


_RAT = r"[+-]?\d+(?:/\d+)?"
_COEF = r"(?P<coef>[+-]?(?:\d+(?:/\d+)?)?)\*?i"
_PURE_IMAG = re.compile(rf"^{_COEF}$")
_MIXED = re.compile(rf"^(?P<re>{_RAT})(?P<coef>[+-](?:\d+(?:/\d+)?)?)\*?i$")
_PURE_REAL = re.compile(rf"^{_RAT}$")


def _imag_coef(body: str) -> Fraction:
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_gaussian(text) -> GaussianRational:
    """Parse ``"3/4"``, ``"-2i"``, ``"1/2+1/3i"``, ``"i"`` and the like."""
    if isinstance(text, int) and not isinstance(text, bool):
        return _make(Fraction(text), _ZERO)
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {text!r}")
    s = text.replace(" ", "")
    try:
        if _PURE_REAL.match(s):
            return _make(Fraction(s), _ZERO)
        m = _PURE_IMAG.match(s)
        if m:
            return _make(_ZERO, _imag_coef(m.group("coef")))
        m = _MIXED.match(s)
        if m:
            return _make(Fraction(m.group("re")), _imag_coef(m.group("coef")))
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {text!r}") from exc
    raise ParseError(f"malformed Gaussian rational {text!r}")


def format_gaussian(z: GaussianRational) -> str:
    if not z.im:
        return str(z.re)
    im = "" if z.im == 1 else "-" if z.im == -1 else str(z.im)
    if not z.re:
        return f"{im}i"
    sign = "" if z.im < 0 else "+"
    return f"{z.re}{sign}{im}i"
