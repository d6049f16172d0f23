from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given

from bergman_exact.errors import DimensionMismatch, ParseError
from bergman_exact.poly import (
    REAL,
    ZZBAR,
    Polynomial,
    compose,
    conjugate_poly,
    convert_coords,
    dbar,
    divides,
    divmod_poly,
    laplacian,
    laplacian_power,
    monomials_upto,
    poly_from_json,
    poly_to_json,
    wirtinger,
    x,
    z,
    zbar,
)
from bergman_exact.scalars import I, GaussianRational
from conftest import polynomials
from oracle import real_symbols, to_sympy

z1, zb1 = z(0, 1), zbar(0, 1)


def test_graded_lex_order_for_one_variable():
    keys = monomials_upto(2, 2)
    assert keys == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_degree_and_zero():
    assert Polynomial.zero(ZZBAR, 2).degree == -1
    assert (z1 * zb1 + 3).degree == 2
    assert (z1 * zb1 - z1 * zb1).is_zero()


def test_holomorphic_flag():
    assert (z1**3 + 2).is_holomorphic()
    assert not (z1 * zb1).is_holomorphic()


def test_wirtinger_on_monomial():
    p = z1**2 * zb1**3
    assert wirtinger(p, 0) == 2 * z1 * zb1**3
    assert wirtinger(p, 0, conjugate=True) == 3 * z1**2 * zb1**2


def test_laplacian_of_zzbar():
    # Delta |z|^2 = 4 in real terms
    assert laplacian(z1 * zb1) == 4


@given(polynomials(ZZBAR, 1, 3), polynomials(ZZBAR, 1, 3))
def test_product_rule(p, q):
    for conj in (False, True):
        lhs = wirtinger(p * q, 0, conj)
        rhs = wirtinger(p, 0, conj) * q + p * wirtinger(q, 0, conj)
        assert lhs == rhs


@given(polynomials(ZZBAR, 2, 2), polynomials(ZZBAR, 2, 2))
def test_degree_additive(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(polynomials(ZZBAR, 2, 3))
def test_coordinate_round_trip(p):
    r = convert_coords(p, REAL)
    assert r.kind == REAL and r.dim == 4
    assert convert_coords(r, ZZBAR) == p


@given(polynomials(ZZBAR, 1, 3))
def test_conversion_agrees_with_sympy(p):
    s = real_symbols(2)
    assert sp.expand(to_sympy(convert_coords(p, REAL), s) - to_sympy(p, s)) == 0


@given(polynomials(ZZBAR, 2, 3))
def test_laplacian_matches_real_laplacian(p):
    lhs = convert_coords(laplacian(p), REAL)
    assert lhs == laplacian(convert_coords(p, REAL))


@given(polynomials(REAL, 2, 4))
def test_laplacian_matches_sympy(p):
    s = real_symbols(2)
    e = to_sympy(p, s)
    expected = sp.diff(e, s[0], 2) + sp.diff(e, s[1], 2)
    assert sp.expand(to_sympy(laplacian(p), s) - expected) == 0


def test_laplacian_power():
    assert laplacian_power(x(0, 1)**4, 2) == 24
    assert laplacian_power(x(0, 1)**4, 0) == x(0, 1)**4


@given(polynomials(ZZBAR, 1, 2), polynomials(ZZBAR, 1, 2), polynomials(ZZBAR, 1, 2))
def test_compose_is_multiplicative(p, q, g):
    maps = [g]
    assert compose(p * q, maps) == compose(p, maps) * compose(q, maps)
    assert compose(p + q, maps) == compose(p, maps) + compose(q, maps)


def test_compose_uses_conjugate_for_zbar():
    n = 2
    f = [z(0, n) + z(1, n)**2, z(1, n)]
    got = compose(zbar(0, n), f)
    assert got == zbar(0, n) + zbar(1, n)**2


def test_compose_with_complex_coefficients():
    got = compose(zb1, [I * z1])
    assert got == -I * zb1


def test_compose_dimension_check():
    with pytest.raises(DimensionMismatch):
        compose(z(0, 2), [z1])


@given(polynomials(ZZBAR, 2, 3))
def test_conjugation_is_involution(p):
    assert conjugate_poly(conjugate_poly(p)) == p


def test_conjugate_swaps_exponents():
    assert conjugate_poly((1 + I) * z1**2 * zb1) == (1 - I) * z1 * zb1**2


@given(polynomials(ZZBAR, 1, 2), polynomials(ZZBAR, 1, 2))
def test_division_recovers_multiples(q, b):
    if b.is_zero():
        return
    quot, rem = divmod_poly(q * b, b)
    assert rem.is_zero()
    assert quot == q
    assert divides(b, q * b)


def test_division_with_remainder():
    r = z1 * zb1 - 1
    assert not divides(r, z1)
    quot, rem = divmod_poly(z1 * zb1 + z1, r)
    assert quot * r + rem == z1 * zb1 + z1


def test_dbar_kills_holomorphic():
    assert all(c.is_zero() for c in dbar(z1**3 + z1).components)


def test_evaluate_uses_conjugate():
    p = z1 * zb1
    assert p.evaluate([GaussianRational(1, 1)]) == 2


@given(polynomials(ZZBAR, 2, 3))
def test_json_round_trip(p):
    assert poly_from_json(poly_to_json(p)) == p


@given(polynomials(REAL, 3, 3))
def test_json_round_trip_real(p):
    assert poly_from_json(poly_to_json(p)) == p


@pytest.mark.parametrize("obj", [
    [],
    {"vars": "polar", "n": 1, "terms": []},
    {"vars": "zzbar", "n": 1, "terms": [{"alpha": [1, 0], "beta": [0]}]},
    {"vars": "zzbar", "n": 1, "terms": [{"alpha": [1], "beta": [0], "re": 0.5}]},
    {"vars": "real", "n": 1, "terms": [{"alpha": [1], "beta": [0]}]},
    {"vars": "zzbar", "n": -1, "terms": []},
])
def test_json_rejects_malformed(obj):
    with pytest.raises(ParseError):
        poly_from_json(obj)


def test_mixing_kinds_fails():
    with pytest.raises((DimensionMismatch, ValueError)):
        z1 + x(0, 2)


def test_fraction_coefficients_stay_exact():
    p = z1.scale(Fraction(1, 3)) * 3
    assert p == z1
