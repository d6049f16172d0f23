from fractions import Fraction

import pytest
from hypothesis import given

from bergman_exact.errors import ParseError
from bergman_exact.scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    format_gaussian,
    format_rational,
    parse_gaussian,
    parse_rational,
)
from conftest import gaussians, small_fractions


@pytest.mark.parametrize("text, expected", [
    ("3/4", Fraction(3, 4)),
    ("-2", Fraction(-2)),
    ("6/8", Fraction(3, 4)),
    (5, Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "0.5", 0.5, None, "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


@pytest.mark.parametrize("text, re, im", [
    ("3/4", Fraction(3, 4), 0),
    ("-2i", 0, -2),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("1/2+1/3i", Fraction(1, 2), Fraction(1, 3)),
    ("1-i", 1, -1),
])
def test_parse_gaussian(text, re, im):
    assert parse_gaussian(text) == GaussianRational(re, im)


@pytest.mark.parametrize("bad", ["", "2j", "1+", "i i", "1.5"])
def test_parse_gaussian_rejects(bad):
    with pytest.raises(ParseError):
        parse_gaussian(bad)


@given(gaussians)
def test_gaussian_format_round_trip(g):
    assert parse_gaussian(format_gaussian(g)) == g


def test_unit_identities():
    assert I * I == -ONE
    assert (ONE + I) * (ONE - I) == 2
    assert ZERO == 0 and not ZERO
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()) == a.norm()
    if b:
        assert (a / b) * b == a


@given(small_fractions, gaussians)
def test_mixed_arithmetic_with_fractions(q, g):
    assert q + g == GaussianRational(q) + g
    assert q * g == g * q
    assert g - q == -(q - g)


def test_immutable():
    g = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        g.re = Fraction(3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
