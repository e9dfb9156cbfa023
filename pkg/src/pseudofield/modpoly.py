"""Polynomials over Z/l^n: Euclid and factoring over F_l, and the two
lifting lemmas (monic multiples, coprime factor lifting)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotCoprime, NotMonicModL, PreconditionViolated, ZeroPolynomial
from .field import is_prime
from .poly import IntPoly


@dataclass(frozen=True)
class ModPoly:
    ell: int
    exponent: int
    coeffs: tuple = ()

    def __post_init__(self):
        if not is_prime(self.ell) or self.exponent < 1:
            raise ValueError(f"bad modulus {self.ell}^{self.exponent}")
        q = self.ell**self.exponent
        cs = [int(c) % q for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def modulus(self) -> int:
        return self.ell**self.exponent

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def degree_mod_l(self) -> int:
        """Degree of the reduction mod l (-1 for a polynomial divisible by l)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] % self.ell:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        """Leading coefficient a unit and no terms above the mod-l degree."""
        return bool(self.coeffs) and self.lc % self.ell != 0

    def is_strictly_monic(self) -> bool:
        return self.lc == 1

    def _new(self, cs, exponent=None):
        return ModPoly(self.ell, self.exponent if exponent is None else exponent, cs)

    def reduce(self, exponent: int) -> "ModPoly":
        return self._new(self.coeffs, exponent)

    def to_int(self) -> IntPoly:
        return IntPoly(self.coeffs)

    @classmethod
    def of(cls, f, ell: int, exponent: int = 1) -> "ModPoly":
        cs = f.coeffs if hasattr(f, "coeffs") else f
        return cls(ell, exponent, cs)

    def _check(self, other):
        if (other.ell, other.exponent) != (self.ell, self.exponent):
            raise ValueError("mixing different moduli")

    def __add__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._new([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new([other * c for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self._new([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def divmod(self, d: "ModPoly"):
        """Division by a polynomial whose leading coefficient is a unit."""
        self._check(d)
        if d.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        q = self.modulus
        if d.lc % self.ell == 0:
            raise ValueError("divisor's leading coefficient is not a unit")
        inv = pow(d.lc, -1, q)
        r = list(self.coeffs)
        quo = [0] * max(0, len(r) - len(d.coeffs) + 1)
        for i in range(len(quo) - 1, -1, -1):
            c = r[i + d.degree] * inv % q
            quo[i] = c
            if c:
                for j, dc in enumerate(d.coeffs):
                    r[i + j] = (r[i + j] - c * dc) % q
        return self._new(quo), self._new(r)

    def __mod__(self, d):
        return self.divmod(d)[1]

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def monic(self) -> "ModPoly":
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.modulus)

    def powmod(self, e: int, f: "ModPoly") -> "ModPoly":
        out, base = self._new([1]) % f, self % f
        while e:
            if e & 1:
                out = out * base % f
            base = base * base % f
            e >>= 1
        return out

    def derivative(self) -> "ModPoly":
        return self._new([i * c for i, c in enumerate(self.coeffs) if i])

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.modulus
        return acc

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)} mod {self.ell}^{self.exponent})"


def _field_poly(f, ell: int) -> ModPoly:
    if isinstance(f, ModPoly):
        return ModPoly(ell, 1, f.coeffs)
    return ModPoly.of(f, ell, 1)


def gcd_mod_l(f, g, ell: int) -> ModPoly:
    """Monic gcd over F_l (zero if both vanish)."""
    a, b = _field_poly(f, ell), _field_poly(g, ell)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd_mod_l(f, g, ell: int):
    """(d, u, v) with u*f + v*g == d monic over F_l."""
    a, b = _field_poly(f, ell), _field_poly(g, ell)
    one, zero = ModPoly(ell, 1, [1]), ModPoly(ell, 1, [])
    u0, v0, u1, v1 = one, zero, zero, one
    while not b.is_zero():
        q, r = a.divmod(b)
        a, b = b, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if a.is_zero():
        return a, u0, v0
    c = pow(a.lc, -1, ell)
    return a * c, u0 * c, v0 * c


def bezout_mod_l(r1, r2, ell: int):
    d, u, v = ext_gcd_mod_l(r1, r2, ell)
    if d.degree != 0:
        raise NotCoprime("polynomials are not coprime mod l")
    return u, v


def has_root_mod_p(coeffs, p: int) -> bool:
    """Root test via gcd(X^p - X, f) over F_p."""
    f = ModPoly(p, 1, coeffs)
    if f.is_zero():
        return True
    if f.degree == 0:
        return False
    if f.coeffs[0] == 0:
        return True
    xp = ModPoly(p, 1, [0, 1]).powmod(p, f)
    return gcd_mod_l(xp - ModPoly(p, 1, [0, 1]), f, p).degree > 0


def _pth_root(f: ModPoly) -> ModPoly:
    """For f(X) = g(X^l) over F_l, return g (coefficients are their own l-th roots)."""
    ell = f.ell
    return ModPoly(ell, 1, [f.coeffs[i] for i in range(0, len(f.coeffs), ell)])


def _square_free(f: ModPoly):
    """Square-free decomposition over F_l: list of (g, multiplicity), g monic square-free."""
    ell = f.ell
    out = []

    def rec(f, mult):
        if f.degree <= 0:
            return
        d = f.derivative()
        if d.is_zero():
            rec(_pth_root(f), mult * ell)
            return
        c = gcd_mod_l(f, d, ell)
        w = f // c
        i = 1
        while w.degree > 0:
            y = gcd_mod_l(w, c, ell)
            fac = w // y
            if fac.degree > 0:
                out.append((fac.monic(), i * mult))
            w, c = y, c // y
            i += 1
        if c.degree > 0:
            rec(_pth_root(c), mult * ell)

    rec(f.monic(), 1)
    return out


def _distinct_degree(f: ModPoly):
    ell = f.ell
    x = ModPoly(ell, 1, [0, 1])
    out, h, d = [], x, 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(ell, f)
        g = gcd_mod_l(h - x, f, ell)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _sweep(ell: int, n: int):
    """Deterministic enumeration of nonconstant polynomials of degree < n over F_l."""
    for deg in range(1, n):
        for tail in product(range(ell), repeat=deg):
            yield ModPoly(ell, 1, list(tail) + [1])


def _equal_degree(f: ModPoly, d: int):
    ell = f.ell
    if f.degree == d:
        return [f.monic()]
    for a in _sweep(ell, f.degree):
        if ell == 2:
            t, s = a % f, a % f
            for _ in range(d - 1):
                t = t * t % f
                s = s + t
            cand = s
        else:
            cand = a.powmod((ell**d - 1) // 2, f) - 1
        g = gcd_mod_l(cand, f, ell)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d) + _equal_degree(f // g, d)
    raise AssertionError("equal-degree split failed")  # unreachable for square-free f


def factor_mod_l(f, ell: int):
    """Monic irreducible factors over F_l with multiplicities, sorted by (degree, coeffs)."""
    f = _field_poly(f, ell)
    if f.is_zero():
        raise ZeroPolynomial("cannot factor zero mod l")
    out = {}
    for g, mult in _square_free(f):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree(h, d):
                out[irr.coeffs] = out.get(irr.coeffs, 0) + mult
    return sorted(((ModPoly(ell, 1, c), m) for c, m in out.items()), key=lambda t: (len(t[0].coeffs), t[0].coeffs[::-1]))


def monic_multiple(u: ModPoly) -> ModPoly:
    """v with (1 + l v) u monic mod l^n.

    Each round moves the block of terms above deg_l(u) from divisibility by
    l^k to l^(k+1): divide that block (over l^k) by u mod l and subtract.
    The result is reduced mod l^(n-1), which is all that l*v depends on.
    """
    ell, n = u.ell, u.exponent
    d = u.degree_mod_l()
    if d < 0:
        raise NotMonicModL("u vanishes mod l")
    ubar = ModPoly(ell, 1, u.coeffs)
    v = [0]
    for k in range(1, n):
        w = (ModPoly(ell, n, [1]) + ModPoly(ell, n, [ell * c for c in v])) * u
        high = [c // ell**k for c in w.coeffs[d + 1 :]]
        assert all(c % ell**k == 0 for c in w.coeffs[d + 1 :])
        t = ModPoly(ell, 1, [0] * (d + 1) + high)
        if t.is_zero():
            continue
        a = (t // ubar).coeffs
        v = [(x - ell ** (k - 1) * y) for x, y in zip(v + [0] * (len(a) - len(v)), list(a) + [0] * (len(v) - len(a)))]
    vn = ModPoly(ell, n, [c % (ell ** (n - 1)) for c in v] if n > 1 else [])
    w = (ModPoly(ell, n, [1]) + vn * ell) * u
    assert w.degree == d and w.is_monic(), (u, vn, w)
    return vn


def coprime_lift(w: ModPoly, r1: ModPoly, r2: ModPoly):
    """Lift w == r1*r2 (mod l) to w == r1'*r2' (mod l^n), r_i' == r_i (mod l)."""
    ell, n = w.ell, w.exponent
    if not w.is_strictly_monic():
        raise PreconditionViolated("w must be monic mod l^n")
    r1 = ModPoly(ell, 1, r1.coeffs)
    r2 = ModPoly(ell, 1, r2.coeffs)
    if not (r1.is_strictly_monic() and r2.is_strictly_monic()):
        raise PreconditionViolated("r1 and r2 must be monic mod l")
    if w.degree != r1.degree + r2.degree or ModPoly(ell, 1, w.coeffs) != r1 * r2:
        raise PreconditionViolated("w is not r1*r2 mod l")
    try:
        f, g = bezout_mod_l(r1, r2, ell)
    except NotCoprime:
        raise PreconditionViolated("r1 and r2 are not coprime mod l") from None
    a, b = r1.reduce(n), r2.reduce(n)
    for k in range(1, n):
        err = (w - a * b).coeffs
        assert all(c % ell**k == 0 for c in err)
        e = ModPoly(ell, 1, [c // ell**k for c in err])
        if e.is_zero():
            continue
        d2 = e * f % r2
        d1 = e * g % r1
        a = a + ModPoly(ell, n, [ell**k * c for c in d1.coeffs])
        b = b + ModPoly(ell, n, [ell**k * c for c in d2.coeffs])
    assert a * b == w
    return a, b
