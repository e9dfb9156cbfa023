"""Rings of integers of Q and of quadratic fields, with ideals as Z-lattices.

Elements of O_K are integer pairs (a, b) meaning a + b*w, where w = sqrt(D)
or (1 + sqrt(D))/2 for squarefree D = 1 mod 4.  For K = Q the pairs are
(a, 0).  Ideals are stored as the row Hermite normal form of their Z-basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import in_lattice, row_hnf


def squarefree_part(n: int) -> tuple[int, int]:
    """(D, f) with n == f^2 * D and D squarefree (sign kept in D)."""
    sign, n = (-1 if n < 0 else 1), abs(n)
    f, D = 1, 1
    k = 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
            f *= k
        if n % k == 0:
            n //= k
            D *= k
        k += 1
    return sign * D * n, f


@dataclass(frozen=True)
class QuadraticField:
    D: int | None = None  # None means Q itself

    def __post_init__(self):
        if self.D is not None:
            _, f = squarefree_part(self.D)
            if f != 1 or self.D in (0, 1):
                raise ValueError(f"D = {self.D} must be squarefree and not 0 or 1")

    @property
    def degree(self) -> int:
        return 1 if self.D is None else 2

    @property
    def half_integral(self) -> bool:
        return self.D is not None and self.D % 4 == 1

    def from_sqrt(self, a: int, b: int = 0):
        """The integer a + b*sqrt(D), written in the (1, w) basis."""
        if self.half_integral:
            return (a - b, 2 * b)
        return (a, b)

    def mul(self, u, v):
        a, b = u
        c, d = v
        if self.D is None:
            return (a * c, 0)
        if self.half_integral:
            t = (self.D - 1) // 4  # w^2 = w + t
            return (a * c + b * d * t, a * d + b * c + b * d)
        return (a * c + b * d * self.D, a * d + b * c)

    def add(self, u, v):
        return (u[0] + v[0], u[1] + v[1])

    def scale(self, c: int, u):
        return (c * u[0], c * u[1])

    def norm(self, u) -> int:
        a, b = u
        if self.D is None:
            return a
        if self.half_integral:
            return a * a + a * b - b * b * (self.D - 1) // 4
        return a * a - self.D * b * b

    def basis(self):
        return [(1, 0)] if self.D is None else [(1, 0), (0, 1)]

    def vec(self, u):
        return [u[0]] if self.D is None else [u[0], u[1]]

    def ideal(self, gens) -> "Ideal":
        vecs = [self.vec(self.mul(g, w)) for g in gens for w in self.basis()]
        return Ideal(self, tuple(tuple(r) for r in row_hnf(vecs)))

    def lattice(self, elems):
        """Row HNF of the Z-span of elems (not closed under O_K)."""
        return row_hnf([self.vec(e) for e in elems])


@dataclass(frozen=True)
class Ideal:
    field: QuadraticField
    hnf: tuple

    def norm(self) -> int:
        if len(self.hnf) < self.field.degree:
            return 0
        n = 1
        for i, row in enumerate(self.hnf):
            n *= row[i]
        return abs(n)

    def contains(self, u) -> bool:
        return in_lattice([list(r) for r in self.hnf], self.field.vec(u))

    def elements(self):
        return [tuple(r) + (0,) * (2 - len(r)) for r in self.hnf]

    def __mul__(self, other):
        K = self.field
        return K.ideal([K.mul(a, b) for a in self.elements() for b in other.elements()])

    def __pow__(self, n: int):
        out = self.field.ideal([(1, 0)])
        for _ in range(n):
            out = out * self
        return out


def element_norm_search(K: QuadraticField, basis, target: int, height: int):
    """Elements c1*b1 + c2*b2 of a rank-2 lattice with |N| == target, by growing box."""
    b1, b2 = basis
    for h in range(0, height + 1):
        for c1 in range(-h, h + 1):
            for c2 in range(-h, h + 1):
                if max(abs(c1), abs(c2)) != h:
                    continue
                e = K.add(K.scale(c1, tuple(b1)), K.scale(c2, tuple(b2)))
                if e != (0, 0) and abs(K.norm(e)) == target:
                    yield e
