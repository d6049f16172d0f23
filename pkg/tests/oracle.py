"""Independent sympy reference computations used only by the tests.

Ball moments come from the Gamma-function formula, disc and Reinhardt moments
from direct polar-coordinate integration, so none of this shares code with the
package's double-factorial moment tables.
"""

from functools import lru_cache

import sympy as sp

from bergman_exact.poly import REAL, ZZBAR


def real_symbols(d):
    return sp.symbols(f"w0:{d}", real=True)


def to_sympy(p, syms=None):
    """Polynomial -> sympy expression in real variables (x_1..x_n, y_1..y_n)."""
    if p.kind == REAL:
        syms = syms or real_symbols(p.dim)
        expr = 0
        for key, c in p.items():
            mono = sp.Mul(*[s**e for s, e in zip(syms, key)])
            expr += (sp.Rational(c.re.numerator, c.re.denominator)
                     + sp.I * sp.Rational(c.im.numerator, c.im.denominator)) * mono
        return sp.expand(expr)
    n = p.dim
    syms = syms or real_symbols(2 * n)
    zs = [syms[j] + sp.I * syms[n + j] for j in range(n)]
    zbs = [syms[j] - sp.I * syms[n + j] for j in range(n)]
    expr = 0
    for key, c in p.items():
        alpha, beta = key[:n], key[n:]
        mono = sp.Mul(*[zs[j]**alpha[j] * zbs[j]**beta[j] for j in range(n)])
        expr += (sp.Rational(c.re.numerator, c.re.denominator)
                 + sp.I * sp.Rational(c.im.numerator, c.im.denominator)) * mono
    return sp.expand(expr)


@lru_cache(maxsize=None)
def ball_moment(d, k):
    """Integral of prod w_i^k_i over the unit ball of R^d, via Gamma functions."""
    if any(e % 2 for e in k):
        return sp.Integer(0)
    num = sp.Mul(*[sp.gamma(sp.Rational(e + 1, 2)) for e in k])
    return num / sp.gamma(sp.Rational(d + sum(k), 2) + 1)


def integrate_ellipsoid(expr, syms, S, c=None):
    """Integral over S*B + c of a polynomial expression, by pulling back to the ball."""
    d = len(syms)
    c = c or [0] * d
    M = sp.Matrix([[sp.Rational(v) for v in row] for row in S])
    us = sp.symbols(f"u0:{d}", real=True)
    sub = {syms[i]: sum(M[i, j] * us[j] for j in range(d)) + sp.Rational(c[i]) for i in range(d)}
    pulled = sp.Poly(sp.expand(expr.subs(sub, simultaneous=True)), *us)
    total = sum(coef * ball_moment(d, tuple(mon)) for mon, coef in pulled.terms())
    return sp.expand(total * abs(M.det()))


def integrate_reinhardt(expr, syms, kind, params):
    """Integral over a polydisc or complex ellipsoid (sum a_j |z_j|^2 < 1) in C^1 or C^2, in polar coordinates."""
    n = len(syms) // 2
    rho = sp.symbols(f"rho0:{n}", positive=True)
    th = sp.symbols(f"th0:{n}", real=True)
    sub = {}
    for j in range(n):
        sub[syms[j]] = rho[j] * sp.cos(th[j])
        sub[syms[n + j]] = rho[j] * sp.sin(th[j])
    f = sp.expand(expr.subs(sub, simultaneous=True)) * sp.Mul(*rho)
    for j in range(n):
        f = sp.integrate(f, (th[j], 0, 2 * sp.pi))
    params = [sp.Rational(v) for v in params]
    if kind == "polydisc":
        for j in range(n):
            f = sp.integrate(f, (rho[j], 0, params[j]))
        return sp.simplify(f)
    # complex ellipsoid: sum a_j rho_j^2 < 1
    if n == 1:
        return sp.simplify(sp.integrate(f, (rho[0], 0, 1 / sp.sqrt(params[0]))))
    a1, a2 = params
    f = sp.integrate(f, (rho[0], 0, sp.sqrt((1 - a2 * rho[1] ** 2) / a1)))
    return sp.simplify(sp.integrate(sp.expand(f), (rho[1], 0, 1 / sp.sqrt(a2))))


def gram_projection(inner, P, basis):
    """Orthogonal projection of P onto span(basis) for a sympy inner product."""
    k = len(basis)
    G = sp.Matrix(k, k, lambda i, j: inner(basis[j], basis[i]))
    b = sp.Matrix(k, 1, lambda i, _: inner(P, basis[i]))
    coeffs = G.LUsolve(b)
    return sp.expand(sum(sp.cancel(c) * e for c, e in zip(coeffs, basis)))


__all__ = ["to_sympy", "real_symbols", "ball_moment", "integrate_ellipsoid",
           "integrate_reinhardt", "gram_projection", "REAL", "ZZBAR"]


def pi_rational(v):
    """PiRational -> sympy number, for comparisons against the oracle."""
    q = v.q
    re = sp.Rational(q.re.numerator, q.re.denominator)
    im = sp.Rational(q.im.numerator, q.im.denominator)
    return (re + sp.I * im) * sp.pi**v.k


def same(a, b):
    return sp.simplify(sp.expand(a - b)) == 0
