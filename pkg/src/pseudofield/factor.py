"""Factorization of integer polynomials (Zassenhaus: factor mod l, Hensel-lift,
recombine) and small integer helpers."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

import sympy

from .errors import FactorizationUnsupported
from .field import is_prime
from .modpoly import ModPoly, coprime_lift, factor_mod_l, gcd_mod_l
from .poly import IntPoly, content, poly_prod

MAX_RECOMBINE = 16


def factor_integer(n: int) -> dict:
    return {int(p): int(e) for p, e in sympy.factorint(abs(n)).items()}


def _qpoly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            c = r[-1] / b[-1]
            s = len(r) - len(b)
            for i, bc in enumerate(b):
                r[s + i] -= c * bc
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(int(c * den) for c in a).primitive()


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    return _qpoly_gcd(f, g)


def square_free_decomposition(f: IntPoly):
    """Yun's algorithm on a primitive f: list of (g_i, i) with f = prod g_i^i."""
    f = f.primitive()
    out = []
    a = poly_gcd(f, f.derivative())
    b = _exact_q_div(f, a)
    c = _exact_q_div(f.derivative(), a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = _exact_q_div(b, a)
        c = _exact_q_div(d, a)
        d = c - b.derivative()
        i += 1
    return out


def _exact_q_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """f / g when g | f over Q and the quotient is integral (f, g from Yun)."""
    if g.degree == 0:
        q = [Fraction(c, g.lc) for c in f.coeffs]
    else:
        r = [Fraction(c) for c in f.coeffs]
        q = [Fraction(0)] * max(0, len(r) - len(g.coeffs) + 1)
        for i in range(len(q) - 1, -1, -1):
            c = r[i + g.degree] / g.lc
            q[i] = c
            for j, gc in enumerate(g.coeffs):
                r[i + j] -= c * gc
        assert not any(r), "division not exact"
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    assert den == 1, "quotient not integral"
    return IntPoly(int(c) for c in q)


def _choose_prime(f: IntPoly) -> int:
    ell = 2
    while True:
        if is_prime(ell) and f.lc % ell:
            fl = ModPoly.of(f, ell)
            if gcd_mod_l(fl, fl.derivative(), ell).degree == 0:
                return ell
        ell += 1


def _hensel_all(f: IntPoly, factors, ell: int, e: int):
    """Lift monic mod-l factors of f to mod l^e (f scaled to be monic mod l^e)."""
    q = ell**e
    w = ModPoly(ell, e, [c * pow(f.lc, -1, q) for c in f.coeffs])
    out = []
    rest = list(factors)
    while len(rest) > 1:
        head = rest.pop(0)
        tail = poly_prod_mod(rest, ell)
        a, b = coprime_lift(w, head, tail)
        out.append(a)
        w = b
    out.append(w)
    return out


def poly_prod_mod(polys, ell):
    acc = ModPoly(ell, 1, [1])
    for g in polys:
        acc = acc * ModPoly(ell, 1, g.coeffs)
    return acc


def _symmetric(cs, q):
    return [c - q if c > q // 2 else c for c in cs]


def _factor_square_free(f: IntPoly):
    """Irreducible factors of a primitive square-free f with lc > 0."""
    if f.degree <= 1:
        return [f]
    ell = _choose_prime(f)
    mod_factors = [g for g, _ in factor_mod_l(f, ell)]
    if len(mod_factors) == 1:
        return [f]
    if len(mod_factors) > MAX_RECOMBINE:
        raise FactorizationUnsupported(f"{len(mod_factors)} modular factors is too many to recombine")
    norm = isqrt(sum(c * c for c in f.coeffs)) + 1
    bound = 2 * abs(f.lc) * 2**f.degree * norm
    e = 1
    while ell**e <= bound:
        e += 1
    q = ell**e
    lifted = _hensel_all(f, mod_factors, ell, e)
    found = []
    s = 1
    g = f
    while 2 * s <= len(lifted):
        hit = False
        for S in combinations(range(len(lifted)), s):
            cand = ModPoly(ell, e, [g.lc])
            for i in S:
                cand = cand * lifted[i]
            h = IntPoly(_symmetric(cand.coeffs, q)).primitive()
            if h.degree > 0 and h.divides(g):
                found.append(h)
                g = g // h
                lifted = [lifted[i] for i in range(len(lifted)) if i not in S]
                hit = True
                break
        if not hit:
            s += 1
    if g.degree > 0:
        found.append(g.primitive())
    return found


def factor_int_poly(f: IntPoly):
    """(content, [(irreducible primitive factor, multiplicity)]) with f = c * prod.

    Factors have positive leading coefficient; sorted by (degree, coefficients).
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    c = content(f)
    if f.lc < 0:
        c = -c
    prim = IntPoly(v // c for v in f.coeffs)
    out = []
    for g, mult in square_free_decomposition(prim):
        for h in _factor_square_free(g):
            out.append((h, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    assert c * poly_prod(h**m for h, m in out) == f
    return c, out


def is_irreducible(f: IntPoly) -> bool:
    c, facs = factor_int_poly(f)
    return len(facs) == 1 and facs[0][1] == 1 and f.degree >= 1
