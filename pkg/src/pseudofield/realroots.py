"""Sturm sequences and real-root isolation over exact rationals."""

from __future__ import annotations

from fractions import Fraction

from .poly import IntPoly


def _prem(a, b):
    """Remainder of a by b over Q (ascending Fraction lists)."""
    r = list(a)
    while len(r) >= len(b) and r:
        c = r[-1] / b[-1]
        shift = len(r) - len(b)
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def sturm_sequence(f: IntPoly):
    seq = [[Fraction(c) for c in f.coeffs], [Fraction(c) for c in f.derivative().coeffs]]
    while seq[-1]:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _eval(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def sign_variations(seq, x) -> int:
    signs = [v for v in (_eval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(f: IntPoly, lo, hi) -> int:
    """Distinct real roots of f in (lo, hi]."""
    seq = sturm_sequence(f)
    return sign_variations(seq, Fraction(lo)) - sign_variations(seq, Fraction(hi))


def cauchy_bound(f: IntPoly) -> Fraction:
    lc = abs(f.lc)
    return 1 + Fraction(max((abs(c) for c in f.coeffs[:-1]), default=0), lc)


def isolate_real_roots(f: IntPoly, lo=None, hi=None):
    """Disjoint intervals (a, b], each holding exactly one root of f."""
    if f.degree < 1:
        return []
    seq = sturm_sequence(f)
    R = cauchy_bound(f)
    lo = -R if lo is None else Fraction(lo)
    hi = R if hi is None else Fraction(hi)
    out, stack = [], [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = sign_variations(seq, a) - sign_variations(seq, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.extend([(mid, b), (a, mid)])
    return sorted(out)


def refine(f: IntPoly, a: Fraction, b: Fraction, width: Fraction):
    """Shrink an isolating interval (a, b] of f to width <= width."""
    while b - a > width:
        mid = (a + b) / 2
        if count_roots(f, a, mid) == 1:
            b = mid
        else:
            a = mid
    return a, b
