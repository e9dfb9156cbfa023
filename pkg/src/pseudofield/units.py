"""Algebraic integers with unit values: from nonvanishing forms and unit
combinations, through resultant-one partners, to an algebraic integer in a
prescribed interval at which given polynomials take unit values.

Every constructive output here is certified after the fact by an exact
resultant or Sturm computation; none is compared against a fixed answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd, lcm

from .deadline import check
from .errors import (
    CycleSearchExhausted,
    DegreeTooLow,
    DegreeUnsupported,
    EndpointRoot,
    NotCoprime,
    NotInCover,
    NotIrreducible,
    NoIntegerSolution,
    NotPrimitive,
    PrincipalityNotFound,
    PreconditionViolated,
    ZeroPolynomial,
)
from .factor import factor_int_poly, factor_integer, is_irreducible
from .field import egcd
from .lattice import solve_integer
from .modpoly import ModPoly, coprime_lift, factor_mod_l, monic_multiple
from .numberfield import QuadraticField, squarefree_part
from .poly import HomogeneousForm, IntPoly, content, form_resultant, sylvester_resultant
from .realroots import count_roots, isolate_real_roots

MAX_EXPONENT = 12
HEIGHT_CAP = 40
CYCLE_CAP = 10**6


# --- data types -------------------------------------------------------------


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if not lo < hi:
            raise ValueError("interval needs lo < hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


@dataclass(frozen=True)
class AlgebraicIntegerRep:
    minpoly: IntPoly
    interval: RationalInterval

    def __post_init__(self):
        if not self.minpoly.is_monic():
            raise ValueError("minimal polynomial must be monic")

    def sturm_count(self) -> int:
        return count_roots(self.minpoly, self.interval.lo, self.interval.hi)

    def to_dict(self) -> dict:
        return {
            "minpoly": list(self.minpoly.coeffs),
            "interval": {"lo": _frac(self.interval.lo), "hi": _frac(self.interval.hi)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d) -> "AlgebraicIntegerRep":
        iv = d["interval"]
        return cls(IntPoly(d["minpoly"]), RationalInterval(Fraction(iv["lo"]), Fraction(iv["hi"])))


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _minpoly_of(alpha) -> IntPoly:
    return alpha.minpoly if isinstance(alpha, AlgebraicIntegerRep) else alpha


# --- multivariate forms (dicts of exponent tuples) --------------------------


def mv_mul(a: dict, b: dict) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def mv_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def mv_substitute(form: dict, polys: list, nvars: int) -> dict:
    """Substitute the forms polys (dicts in nvars variables) for the variables of form."""
    acc = {}
    unit = {(0,) * nvars: 1}
    for e, c in form.items():
        term = dict(unit)
        for p, k in zip(polys, e):
            for _ in range(k):
                term = mv_mul(term, p)
        acc = mv_add(acc, {ee: c * cc for ee, cc in term.items()})
    return acc


def form_degree(form: dict) -> int:
    return sum(next(iter(form))) if form else 0


# --- nonvanishing forms -----------------------------------------------------


def first_irreducible(ell: int, degree: int) -> ModPoly:
    for tail in product(range(ell), repeat=degree):
        f = ModPoly(ell, 1, list(tail) + [1])
        fac = factor_mod_l(f, ell)
        if len(fac) == 1 and fac[0][1] == 1 and fac[0][0].degree == degree:
            return f
    raise AssertionError("irreducible polynomials exist in every degree")


def nonvanishing_form(ell: int, field_degree: int, nvars: int) -> dict:
    """Homogeneous integer form in nvars variables whose only zero over
    GF(l^field_degree) is the origin.

    A monic irreducible of degree field_degree + 1 has no root in
    GF(l^field_degree); homogenized it is a binary form vanishing only at
    (0, 0).  Composing it along a binary tree extends this to 2^k variables,
    and surplus variables are set to zero.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if nvars == 1:
        return {(1,): 1}
    f = first_irreducible(ell, field_degree + 1)
    d = f.degree
    base = {(i, d - i): c for i, c in enumerate(f.coeffs) if c}
    width = 1
    while width < nvars:
        width *= 2
    leaves = [{tuple(int(j == i) for j in range(width)): 1} for i in range(width)]
    layer = leaves
    while len(layer) > 1:
        layer = [mv_substitute(base, [layer[i], layer[i + 1]], width) for i in range(0, len(layer), 2)]
    full = layer[0]
    return {e[:nvars]: c for e, c in full.items() if not any(e[nvars:])}


def gf_elements(ell: int, e: int):
    """GF(l^e) as tuples modulo a fixed irreducible; returns (elements, mul, add)."""
    if e == 1:
        return [(a,) for a in range(ell)], (lambda a, b: ((a[0] * b[0]) % ell,)), (lambda a, b: ((a[0] + b[0]) % ell,))
    m = first_irreducible(ell, e)

    def mul(a, b):
        r = ModPoly(ell, 1, a) * ModPoly(ell, 1, b) % m
        return tuple(r.coeffs) + (0,) * (e - len(r.coeffs))

    def add(a, b):
        return tuple((x + y) % ell for x, y in zip(a, b))

    return [tuple(t) for t in product(range(ell), repeat=e)], mul, add


def form_zero_set(form: dict, ell: int, e: int, nvars: int):
    """All points of GF(l^e)^nvars where the form vanishes (exhaustive)."""
    elems, mul, add = gf_elements(ell, e)
    zero, one = (0,) * e, (1,) + (0,) * (e - 1)

    def scalar(c, x):
        out = zero
        for _ in range(c % ell):
            out = add(out, x)
        return out

    zeros = []
    for point in product(elems, repeat=nvars):
        acc = zero
        for exps, c in form.items():
            term = one
            for v, k in zip(point, exps):
                for _ in range(k):
                    term = mul(term, v)
            acc = add(acc, scalar(c, term))
        if acc == zero:
            zeros.append(point)
    return zeros


# --- unit combinations ------------------------------------------------------


def _reduce_mod_monic(f: IntPoly, m: IntPoly) -> IntPoly:
    return f.divmod(m)[1] if f.degree >= m.degree else f


def unit_combination(k: int, alpha, *, cap: int = CYCLE_CAP) -> HomogeneousForm:
    """Binary form h with h(k, alpha) == 1.

    Work with beta = 1/alpha in the basis 1, beta, .., beta^(d-1).  The
    coordinates of beta^m are k-integral and periodic mod k^(d-1); at a
    period m >= d they are congruent to (1, 0, .., 0), so dividing the i-th
    coordinate by k^i keeps it k-integral.  That gives H with H(k, alpha) = g
    for an integer g coprime to k, and Bezout against k^m finishes.
    """
    f = _minpoly_of(alpha)
    if k < 2:
        raise ValueError("k must be at least 2")
    if not f.is_monic():
        raise ValueError("alpha needs a monic minimal polynomial")
    d = f.degree
    c = list(f.coeffs)  # c[0] + c[1] x + ... + x^d
    if gcd(k, c[0]) != 1:
        raise NotCoprime(f"gcd(k, N(alpha)) = {gcd(k, c[0])}")
    # beta^d = -(1 + c_{d-1} beta + ... + c_1 beta^(d-1)) / c_0
    last = [Fraction(-1, c[0])] + [Fraction(-c[d - i], c[0]) for i in range(1, d)]

    def times_beta(v):
        top = v[-1]
        shifted = [Fraction(0)] + v[:-1]
        return [s + top * l for s, l in zip(shifted, last)]

    mod = k ** (d - 1)
    e0 = [Fraction(1)] + [Fraction(0)] * (d - 1)

    def reduced(v):
        return tuple((x.numerator * pow(x.denominator, -1, mod)) % mod for x in v) if mod > 1 else ()

    start = reduced(e0)
    v, m, period = e0, 0, None
    while period is None:
        v = times_beta(v)
        m += 1
        if reduced(v) == start:
            period = m
        if m > cap:
            raise CycleSearchExhausted(f"no return to the start within {cap} steps")
    m = period * -(-d // period)
    v = e0
    for _ in range(m):
        v = times_beta(v)
    assert reduced(v) == start
    scaled = [x / k**i for i, x in enumerate(v)]
    g = lcm(*(x.denominator for x in scaled))
    H = [int(x * g) for x in scaled]  # H_i multiplies x^i y^(m-i)
    gg, a, b = egcd(g, k**m)
    assert gg == 1
    coeffs = [a * h for h in H] + [0] * (m + 1 - len(H))
    coeffs[m] += b
    h = HomogeneousForm(m, coeffs)
    if not verify_unit_combination(h, k, f):
        raise AssertionError("unit combination failed its own check")
    return h


def verify_unit_combination(h: HomogeneousForm, k: int, minpoly: IntPoly) -> bool:
    """h(k, x) reduced modulo the minimal polynomial equals 1."""
    hk = IntPoly([h.coeffs[h.degree - j] * k ** (h.degree - j) for j in range(h.degree + 1)])
    return _reduce_mod_monic(hk, minpoly) == IntPoly([1])


# --- ideal power generators -------------------------------------------------


@dataclass
class IdealPowerResult:
    form: dict
    nvars: int
    exponent: int
    value: tuple
    field: QuadraticField
    exponent_cap: int = MAX_EXPONENT

    def binary_form(self) -> HomogeneousForm:
        if self.nvars != 2:
            raise ValueError("only two-generator results are binary forms")
        n = self.exponent
        return HomogeneousForm(n, [self.form.get((i, n - i), 0) for i in range(n + 1)])


def _monomials(nvars: int, n: int):
    out = []
    for combo in combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _field_power(K, u, n):
    out = (1, 0)
    for _ in range(n):
        out = K.mul(out, u)
    return out


def ideal_power_generator(K: QuadraticField, gens, *, max_exponent: int = MAX_EXPONENT, height: int = HEIGHT_CAP, deadline=None) -> IdealPowerResult:
    """Homogeneous integer form h and exponent n with h(gens) generating <gens>^n.

    For n = 1, 2, ... the values of degree-n forms at gens are exactly the
    Z-span M_n of the degree-n monomials; search M_n for an element whose
    principal ideal equals <gens>^n, then read off h by solving for the
    monomial coefficients.
    """
    gens = [tuple(g) for g in gens]
    if K.degree > 2:
        raise DegreeUnsupported("only Q and quadratic fields are supported")
    if not gens or all(g == (0, 0) for g in gens):
        raise ValueError("generators must not all vanish")
    I = K.ideal(gens)
    m = len(gens)
    power = K.ideal([(1, 0)])
    for n in range(1, max_exponent + 1):
        check(deadline, "ideal power search")
        power = power * I
        target = power.norm()
        monos = _monomials(m, n)
        vals = []
        for e in monos:
            v = (1, 0)
            for g, k in zip(gens, e):
                v = K.mul(v, _field_power(K, g, k))
            vals.append(v)
        basis = K.lattice(vals)
        for beta in _candidates(K, basis, target, height):
            if K.ideal([beta]) != power:
                continue
            cols = [K.vec(v) for v in vals]
            coeffs = solve_integer([list(r) for r in zip(*cols)], K.vec(beta))
            form = {e: c for e, c in zip(monos, coeffs) if c}
            res = IdealPowerResult(form, m, n, beta, K, max_exponent)
            _verify_generator(K, res, gens, power)
            return res
    raise PrincipalityNotFound(f"no principal power up to exponent {max_exponent} (height cap {height})")


def _candidates(K, basis, target, height):
    if len(basis) == 2:
        yield from _box_search(K, basis, target, height)
    elif len(basis) == 1:
        b = tuple(basis[0]) + (0,) * (2 - len(basis[0]))
        for c in range(1, height + 1):
            for s in (c, -c):
                e = K.scale(s, b)
                if abs(K.norm(e)) == target:
                    yield e


def _box_search(K, basis, target, height):
    from .numberfield import element_norm_search

    yield from element_norm_search(K, basis, target, height)


def _verify_generator(K, res: IdealPowerResult, gens, power):
    value = (0, 0)
    for e, c in res.form.items():
        v = (1, 0)
        for g, k in zip(gens, e):
            v = K.mul(v, _field_power(K, g, k))
        value = K.add(value, K.scale(c, v))
    assert value == tuple(res.value), "form does not evaluate to the generator"
    assert power.contains(res.value), "generator outside the ideal power"
    principal = K.ideal([res.value])
    assert all(principal.contains(b) for b in power.elements()), "ideal power not inside <generator>"


# --- resultant-one partners -------------------------------------------------


def _signed_sweep(limit: int):
    yield 0
    for a in range(1, limit + 1):
        yield a
        yield -a


def res_one_partner_irreducible(p: IntPoly) -> IntPoly:
    """Non-constant g with res(p, g) = +-1 for an irreducible primitive p."""
    if p.degree < 1:
        raise ValueError("p must be non-constant")
    if content(p) != 1:
        raise NotPrimitive("p must have content 1")
    if not is_irreducible(p):
        raise NotIrreducible(f"{p} is reducible")
    if p.degree == 1:
        d, c = p.coeffs  # c*x + d; res(p, u + v x) = c*u - d*v
        _, u, v = egcd(c, -d)
        if v == 0:
            u, v = u + d, v + c
        g = IntPoly([u, v])
    elif p.lc in (1, -1):
        g = None
        for a in _signed_sweep(64):
            if abs(p(a)) == 1:
                g = IntPoly([-a, 1])
                break
        if g is None:
            g = IntPoly([1]) + IntPoly.x() * p
    elif p.degree == 2:
        g = _quadratic_partner(p)
    else:
        raise DegreeUnsupported("non-monic irreducibles of degree > 2 need ideal arithmetic beyond quadratic fields")
    r = sylvester_resultant(p, g)
    assert abs(r) == 1 and g.degree >= 1, (p, g, r)
    return g


def _quadratic_partner(p: IntPoly) -> IntPoly:
    """For c x^2 + b x + a: a generator form h of <c, c*alpha>^n gives g = h(1, x)."""
    a, b, c = p.coeffs
    disc = b * b - 4 * a * c
    D, f = squarefree_part(disc)
    K = QuadraticField(D)
    # c*alpha is a root of y^2 + b y + a c
    c_alpha = ((-b - f) // 2, f) if K.half_integral else (-b // 2, f // 2)
    assert K.norm(c_alpha) == a * c
    res = ideal_power_generator(K, [(c, 0), c_alpha])
    h = res.binary_form()
    n = h.degree
    if h.coeffs[0] == 0:
        # a*x^2 + b*x*y + c*y^2 vanishes at (c, c*alpha); adding it times y^(n-2)
        # changes neither the value nor the degree but makes y^n appear
        h = h + HomogeneousForm(2, [c, b, a]) * HomogeneousForm(n - 2, [1] + [0] * (n - 2))
    return IntPoly(h.coeffs[::-1])


# --- the ap + bq cover ------------------------------------------------------


@dataclass(frozen=True)
class IdealDescriptor:
    ell: int
    exponent: int
    r: ModPoly  # in the chart variable
    s: ModPoly  # irreducible mod l with r == s^multiplicity mod l
    multiplicity: int
    chart: str  # "y=1" or "x=1"

    def chart_poly(self, h: HomogeneousForm) -> IntPoly:
        return h.at_y1() if self.chart == "y=1" else h.at_x1()

    def contains(self, h: HomogeneousForm, exponent: int | None = None) -> bool:
        e = self.exponent if exponent is None else exponent
        r = self.r.reduce(e)
        hp = ModPoly.of(self.chart_poly(h), self.ell, e)
        return (hp % r).is_zero()

    def form(self) -> HomogeneousForm:
        d = self.r.degree
        f = HomogeneousForm(d, self.r.coeffs)
        return f if self.chart == "y=1" else HomogeneousForm(d, self.r.coeffs[::-1])

    def to_dict(self) -> dict:
        return {"ell": self.ell, "exponent": self.exponent, "r": list(self.r.coeffs), "s": list(self.s.coeffs),
                "multiplicity": self.multiplicity, "chart": self.chart}


def _chart_descriptors(P: IntPoly, Q: IntPoly, ell: int, e: int, chart: str):
    u, a, b = _gcd_with_cofactors(P, Q, ell)
    if u.degree < 1:
        return []
    U = ModPoly(ell, e, a.coeffs) * ModPoly.of(P, ell, e) + ModPoly(ell, e, b.coeffs) * ModPoly.of(Q, ell, e)
    v = monic_multiple(U)
    W = ((ModPoly(ell, e, [1]) + v * ell) * U)
    W = W * pow(W.lc, -1, ell**e)
    out = []
    factors = factor_mod_l(W, ell)
    powers = [_pow_mod(s, m) for s, m in factors]
    rest = W
    for i, ((s, m), sm) in enumerate(zip(factors, powers)):
        if i == len(factors) - 1:
            r = rest
        else:
            tail = ModPoly(ell, 1, [1])
            for t in powers[i + 1 :]:
                tail = tail * t
            r, rest = coprime_lift(rest, sm, tail)
        if chart == "x=1" and s.coeffs != (0, 1):
            continue
        out.append(IdealDescriptor(ell, e, r, s, m, chart))
    return out


def _pow_mod(s: ModPoly, m: int) -> ModPoly:
    out = ModPoly(s.ell, 1, [1])
    for _ in range(m):
        out = out * s
    return out


def _gcd_with_cofactors(P, Q, ell):
    from .modpoly import ext_gcd_mod_l

    return ext_gcd_mod_l(ModPoly.of(P, ell), ModPoly.of(Q, ell), ell)


def ideal_cover(p: HomogeneousForm, q: HomogeneousForm):
    """Ideals <l^n, r> whose intersection (in degrees >= deg p + deg q - 1)
    sits inside <p, q>; one family per prime power exactly dividing res(p, q)."""
    res = form_resultant(p, q)
    if res == 0:
        raise NotCoprime("p and q share a factor")
    out = []
    for ell, e in sorted(factor_integer(res).items()):
        out += _chart_descriptors(p.at_y1(), q.at_y1(), ell, e, "y=1")
        out += _chart_descriptors(p.at_x1(), q.at_x1(), ell, e, "x=1")
    for dsc in out:
        assert dsc.contains(p, 1) and dsc.contains(q, 1), "cover ideal misses p or q mod l"
    return out


def _monomial_times(form: HomogeneousForm, i: int, extra: int) -> list:
    """Coefficient vector of x^i y^(extra-i) * form, length deg form + extra + 1."""
    out = [0] * (form.degree + extra + 1)
    for j, c in enumerate(form.coeffs):
        out[i + j] += c
    return out


def express_in_ideal(h: HomogeneousForm, p: HomogeneousForm, q: HomogeneousForm, cover=None):
    """Homogeneous a, b with h == a p + b q exactly.

    Lying in every cover ideal is sufficient for such a, b to exist at this
    degree, not necessary, so the integer system is always tried; a cover
    miss is only reported when the system has no solution either.
    """
    D = h.degree
    if D < p.degree + q.degree - 1:
        raise DegreeTooLow(f"deg h = {D} < deg p + deg q - 1 = {p.degree + q.degree - 1}")
    missed = [dsc for dsc in (cover or []) if not dsc.contains(h)]
    da, db = D - p.degree, D - q.degree
    cols = [_monomial_times(p, i, da) for i in range(da + 1)] if da >= 0 else []
    cols += [_monomial_times(q, i, db) for i in range(db + 1)] if db >= 0 else []
    A = [list(r) for r in zip(*cols)]
    try:
        z = solve_integer(A, list(h.coeffs))
    except NoIntegerSolution:
        if missed:
            raise NotInCover(f"h is outside {missed[0].to_dict()}") from None
        raise
    a = HomogeneousForm(da, z[: da + 1]) if da >= 0 else HomogeneousForm(0, [0])
    b = HomogeneousForm(db, z[da + 1 :]) if db >= 0 else HomogeneousForm(0, [0])
    if _form_sum(a * p, b * q) != h:
        raise AssertionError("linear solve returned a non-identity")
    return a, b


def _form_sum(u: HomogeneousForm, v: HomogeneousForm) -> HomogeneousForm:
    if u.is_zero():
        return v if v.degree == u.degree or not v.is_zero() else u
    if v.is_zero():
        return u
    return u + v


# --- combining partners -----------------------------------------------------


def _unit_order(x: ModPoly, r: ModPoly, cap: int) -> int:
    one = ModPoly(r.ell, r.exponent, [1]) % r
    y = x % r
    cur, k = y, 1
    while cur != one:
        cur = cur * y % r
        k += 1
        if k > cap:
            raise CycleSearchExhausted("unit order search exceeded the ring size")
    return k


def res_one_combine(p: HomogeneousForm, q: HomogeneousForm, f: HomogeneousForm, g: HomogeneousForm, cover=None) -> HomogeneousForm:
    """h with res(pq, h) = +-1, given res(p, f) = +-1 and res(q, g) = +-1."""
    for name, a, b in (("p,f", p, f), ("q,g", q, g)):
        if abs(form_resultant(a, b)) != 1:
            raise PreconditionViolated(f"res({name}) is not +-1")
    if f.degree < 1 or g.degree < 1:
        raise PreconditionViolated("partners must be non-constant")
    if cover is None:
        cover = ideal_cover(p, q)
    of, og = 1, 1
    for dsc in cover:
        size = dsc.ell ** (dsc.exponent * dsc.r.degree)
        for h, which in ((f, "f"), (g, "g")):
            img = ModPoly.of(dsc.chart_poly(h), dsc.ell, dsc.exponent)
            o = _unit_order(img, dsc.r, size)
            if which == "f":
                of = lcm(of, o)
            else:
                og = lcm(og, o)
    step = lcm(of * f.degree, og * g.degree)
    need = max(p.degree + q.degree - 1, 1)
    D = step * -(-need // step)
    f1, g1 = f ** (D // f.degree), g ** (D // g.degree)
    a, _ = express_in_ideal(f1 - g1, p, q, cover)
    h = f1 - a * p if not a.is_zero() else f1
    if abs(form_resultant(p * q, h)) != 1:
        raise AssertionError("combined partner failed the resultant check")
    return h


def res_one_partner(p: IntPoly) -> IntPoly:
    """Monic non-constant q with res(p, q) = +-1."""
    if p.is_zero():
        raise ZeroPolynomial("p is zero")
    if content(p) != 1:
        raise NotPrimitive("p must have content 1")
    if p.degree == 0:
        return IntPoly.x()
    _, factors = factor_int_poly(p)
    forms = [HomogeneousForm.from_poly(g) for g, _ in factors] + [HomogeneousForm.y()]
    partners = [HomogeneousForm.from_poly(res_one_partner_irreducible(g)) for g, _ in factors] + [HomogeneousForm.x()]
    acc_p, acc_f = forms[0], partners[0]
    for q, g in zip(forms[1:], partners[1:]):
        acc_f = res_one_combine(acc_p, q, acc_f, g)
        acc_p = acc_p * q
    H = acc_f
    top = H.coeffs[-1]
    assert abs(top) == 1, "resultant with y forces a unit leading coefficient"
    out = IntPoly(H.coeffs) * top
    assert out.is_monic() and abs(sylvester_resultant(p, out)) == 1
    return out


# --- into an interval -------------------------------------------------------


def _nudge(p: IntPoly, lo: Fraction, hi: Fraction, tries: int = 64):
    for k in range(1, tries):
        if p(lo) != 0:
            break
        lo = lo + (hi - lo) / 2**k
    for k in range(1, tries):
        if p(hi) != 0:
            break
        hi = hi - (hi - lo) / 2**k
    if p(lo) == 0 or p(hi) == 0:
        raise EndpointRoot("could not move the endpoints off the roots of p")
    return lo, hi


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def res_one_in_interval(p: IntPoly, I: RationalInterval):
    """Monic q with res(p, q) = +-1 and a sign change of q strictly inside I.

    Returns (q, (lo, hi)) where (lo, hi) is I after any endpoint nudging.
    """
    lo, hi = _nudge(p, I.lo, I.hi)
    q = res_one_partner(p)
    if q.degree < p.degree + 2:
        q = q ** -(-(p.degree + 2) // q.degree)
    qlo, qhi = q(lo), q(hi)
    plo, phi = p(lo), p(hi)
    if qlo * qhi < 0:
        pass
    elif plo * phi < 0:
        n = 1 + max(_ceil(abs(Fraction(qlo) / plo)), _ceil(abs(Fraction(qhi) / phi)))
        q = q + p * n
    else:
        mid = (lo + hi) / 2
        m0, n0 = mid.denominator, mid.numerator  # root of m0 x - n0 is mid
        dlo, dhi = abs(m0 * lo - n0), abs(m0 * hi - n0)
        t = 1 + max(_ceil(abs(Fraction(qlo) / (plo * dlo))), _ceil(abs(Fraction(qhi) / (phi * dhi))))
        q = q + IntPoly([-t * n0, t * m0]) * p
    assert q.is_monic() and q(lo) * q(hi) < 0
    assert abs(sylvester_resultant(p, q)) == 1
    return q, (lo, hi)


def _clear_denominators(polys) -> IntPoly:
    acc = [Fraction(1)]
    for f in polys:
        cs = [Fraction(c) for c in (f.coeffs if hasattr(f, "coeffs") else f)]
        out = [Fraction(0)] * (len(acc) + len(cs) - 1)
        for i, a in enumerate(acc):
            for j, b in enumerate(cs):
                out[i + j] += a * b
        acc = out
    den = lcm(*(c.denominator for c in acc))
    ints = IntPoly(int(c * den) for c in acc)
    return ints.primitive()


@dataclass
class UnitValueResult:
    alpha: AlgebraicIntegerRep
    q: IntPoly
    p_primitive: IntPoly
    resultant: int
    sturm_count: int
    interval_used: tuple = field(default=())

    def to_dict(self) -> dict:
        d = self.alpha.to_dict()
        d["verification"] = {"resultant": self.resultant, "sturm_count": self.sturm_count}
        return d


def unit_value_alg_integer(polys, I: RationalInterval) -> UnitValueResult:
    """Algebraic integer alpha in I with 1/p(alpha) integral for every p in polys."""
    p = _clear_denominators(polys)
    q, (lo, hi) = res_one_in_interval(p, I)
    _, factors = factor_int_poly(q)
    for g, _ in factors:
        if g(lo) * g(hi) < 0 or count_roots(g, lo, hi) > 0:
            roots = isolate_real_roots(g, lo, hi)
            a, b = next((a, b) for a, b in roots if g(b) != 0)
            alpha = AlgebraicIntegerRep(g, RationalInterval(a, b))
            r = sylvester_resultant(g, p)
            sc = alpha.sturm_count()
            if abs(r) != 1 or sc != 1:
                raise AssertionError("unit-value certificate failed")
            return UnitValueResult(alpha, q, p, r, sc, (lo, hi))
    raise AssertionError("q changes sign in I but no factor has a root there")
