"""Dense integer polynomials, binary forms and Sylvester resultants.

Coefficient lists are ascending everywhere: ``[2, 3, 0, 1]`` is x^3 + 3x + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import zip_longest
from math import gcd

from .errors import NotCoprime, NotPrimitive, ZeroPolynomial


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c: int):
        return cls((c,))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        text = text.strip()
        return cls(int(t) for t in text.split(",")) if text else cls()

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _lift(other)
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = IntPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divmod(self, d: "IntPoly"):
        """Division over Z; exact whenever lc(d) divides every leading term met."""
        if d.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        r = list(self.coeffs)
        q = [0] * max(0, len(r) - len(d.coeffs) + 1)
        for i in range(len(q) - 1, -1, -1):
            top = r[i + d.degree]
            if top % d.lc:
                raise ValueError("division is not exact over the integers")
            c = top // d.lc
            q[i] = c
            if c:
                for j, dc in enumerate(d.coeffs):
                    r[i + j] -= c * dc
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def __mod__(self, d):
        return self.divmod(d)[1]

    def divides(self, f: "IntPoly") -> bool:
        try:
            return f.divmod(self)[1].is_zero()
        except ValueError:
            return False

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, g: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def content(self) -> int:
        return content(self)

    def primitive(self) -> "IntPoly":
        c = content(self)
        if c == 0:
            return self
        if self.lc < 0:
            c = -c
        return IntPoly(v // c for v in self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (abs(c) != 1 or i == 0) else ("-" if c < 0 else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _lift(v) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly.const(v)


def content(f) -> int:
    cs = f.coeffs if hasattr(f, "coeffs") else f
    return reduce(gcd, cs, 0)


def poly_prod(polys) -> IntPoly:
    return reduce(lambda a, b: a * b, polys, IntPoly.const(1))


def bareiss_det(rows) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f_desc, g_desc):
    """Sylvester matrix from descending coefficient lists (formal degrees = len-1)."""
    m, n = len(f_desc) - 1, len(g_desc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f_desc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g_desc) + [0] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    return bareiss_det(sylvester_matrix(f.coeffs[::-1], g.coeffs[::-1]))


def _solve_rational(A, b):
    """Solve A z = b over Q for square nonsingular A (Gauss-Jordan with Fractions)."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [v / pv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def resultant_cofactors(f: IntPoly, g: IntPoly):
    """Integer a, b with a*f + b*g == res(f, g), deg a < deg g, deg b < deg f."""
    res = sylvester_resultant(f, g)
    if res == 0:
        raise NotCoprime("f and g share a root")
    m, n = f.degree, g.degree
    if m + n == 0:
        raise ValueError("cofactors are undefined for two constants")
    # unknowns: a_0..a_{n-1}, b_0..b_{m-1}; equations: coefficient of x^j, j < m+n
    A = [[0] * (m + n) for _ in range(m + n)]
    for i in range(n):
        for t, c in enumerate(f.coeffs):
            A[i + t][i] = c
    for i in range(m):
        for t, c in enumerate(g.coeffs):
            A[i + t][n + i] = c
    rhs = [res] + [0] * (m + n - 1)
    z = _solve_rational(A, rhs)
    if any(v.denominator != 1 for v in z):
        raise ArithmeticError("resultant cofactors are not integral")
    a = IntPoly(int(v) for v in z[:n])
    b = IntPoly(int(v) for v in z[n:])
    return a, b


def coprime_divisibility_check(p: IntPoly, q: IntPoly, f: IntPoly) -> bool:
    """The implication (p | f and q | f) => pq | f, checked by exact division."""
    for name, h in (("p", p), ("q", q)):
        if content(h) != 1:
            raise NotPrimitive(f"{name} is not primitive")
    if p.degree > 0 and q.degree > 0 and sylvester_resultant(p, q) == 0:
        raise NotCoprime("p and q share a root")
    if not (p.divides(f) and q.divides(f)):
        return True
    return (p * q).divides(f)


@dataclass(frozen=True)
class HomogeneousForm:
    """sum c_i x^i y^(d-i); the degree is explicit so leading zeros are kept."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) > self.degree + 1:
            if any(cs[self.degree + 1 :]):
                raise ValueError("too many coefficients for the degree")
            cs = cs[: self.degree + 1]
        cs = cs + (0,) * (self.degree + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_poly(cls, f: IntPoly, degree: int | None = None) -> "HomogeneousForm":
        """Homogenize f(x) to degree >= deg f."""
        d = f.degree if degree is None else degree
        if d < f.degree:
            raise ValueError("degree below that of the polynomial")
        return cls(max(d, 0), f.coeffs)

    @classmethod
    def x(cls):
        return cls(1, (0, 1))

    @classmethod
    def y(cls):
        return cls(1, (1, 0))

    @classmethod
    def parse(cls, text: str) -> "HomogeneousForm":
        head, _, body = text.partition(";")
        if not head.startswith("deg="):
            raise ValueError("form text must start with deg=")
        return cls(int(head[4:]), [int(t) for t in body.split(",") if t.strip()])

    def format(self) -> str:
        return f"deg={self.degree};" + ",".join(str(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def at_y1(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def at_x1(self) -> IntPoly:
        return IntPoly(self.coeffs[::-1])

    def __call__(self, x, y):
        return sum(c * x**i * y ** (self.degree - i) for i, c in enumerate(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return HomogeneousForm(self.degree, [other * c for c in self.coeffs])
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HomogeneousForm(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __add__(self, other):
        if other.degree != self.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("adding forms of different degrees")
        return HomogeneousForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HomogeneousForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, e: int):
        out = HomogeneousForm(0, (1,))
        for _ in range(e):
            out = out * self
        return out

    def content(self) -> int:
        return content(self.coeffs)

    def __repr__(self):
        return f"HomogeneousForm({self.format()})"


def form_resultant(p: HomogeneousForm, q: HomogeneousForm) -> int:
    """Resultant of binary forms with their formal degrees (descending in x)."""
    return bareiss_det(sylvester_matrix(p.coeffs[::-1], q.coeffs[::-1]))
