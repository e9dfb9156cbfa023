"""Arithmetic in a concrete prime field F_p and its square-based order.

Residues are immutable and carry their field; mixing residues of different
fields raises ``FieldMismatch`` instead of silently reducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadModulus, FieldMismatch, NotResidue, ZeroInverse

# Deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= 3_317_044_064_679_887_385_961_981:
        import sympy

        return bool(sympy.isprime(n))
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def inv_mod(a: int, m: int) -> int:
    g, s, _ = egcd(a % m, m)
    if g != 1:
        raise ZeroInverse(f"{a} is not invertible modulo {m}")
    return s % m


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise BadModulus(f"{self.p} is not an odd prime")

    def __call__(self, value: int) -> "Residue":
        return Residue(value % self.p, self)

    def __iter__(self):
        for v in range(self.p):
            yield Residue(v, self)

    def __len__(self):
        return self.p

    @property
    def minus_one_is_square(self) -> bool:
        return self.p % 4 == 1


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Cached field constructor; primality is checked once per modulus."""
    return PrimeField(p)


@dataclass(frozen=True)
class Residue:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise ValueError(f"{self.value} is not reduced modulo {self.field.p}")

    @property
    def p(self) -> int:
        return self.field.p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.field != self.field:
                raise FieldMismatch(f"F_{other.p} residue used with F_{self.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _make(self, v: int) -> "Residue":
        return Residue(v % self.field.p, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * inv(self._make(o))

    def __neg__(self):
        return self._make(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return inv(self) ** (-e)
        return self._make(pow(self.value, e, self.field.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def signed(self) -> int:
        """Representative in (-p/2, p/2)."""
        v = self.value
        return v - self.field.p if v > self.field.p // 2 else v

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def inv(a: Residue) -> Residue:
    if a.value == 0:
        raise ZeroInverse("0 has no inverse")
    return Residue(inv_mod(a.value, a.p), a.field)


def is_square(a: Residue) -> bool:
    """Euler's criterion; 0 counts as a square."""
    if a.value == 0:
        return True
    return pow(a.value, (a.p - 1) // 2, a.p) == 1


def sqrt_3mod4(a: Residue) -> Residue:
    """Square root for p = 3 mod 4, returned as the smaller of the two roots."""
    p = a.p
    if p % 4 != 3:
        raise BadModulus(f"p = {p} is not 3 mod 4")
    if not is_square(a):
        raise NotResidue(f"{a.value} is not a square mod {p}")
    r = pow(a.value, (p + 1) // 4, p)
    return Residue(min(r, p - r), a.field)


def order_le(a: Residue, b: Residue) -> bool:
    """a <= b iff b - a is a square."""
    return is_square(b - a)
