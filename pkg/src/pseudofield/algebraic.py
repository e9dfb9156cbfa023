"""Matrix-eigenvalue witnesses for residues and the algebra that combines them.

A witness (M, k, m) for x in F_p says that k*x is an eigenvalue of the
integer matrix M reduced mod p, with every entry of M bounded by m in
absolute value.  Its cost is ``n + ceil_log2(max(m, k))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from math import prod

from .errors import FieldMismatch, NotARoot, ZeroTarget
from .field import GF, Residue, inv_mod

JSON_SAFE = 2**53


def ceil_log2(t: int) -> int:
    if t < 1:
        raise ValueError("ceil_log2 needs t >= 1")
    return (t - 1).bit_length()


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("IntMatrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry_bound(self) -> int:
        return max(abs(v) for r in self.rows for v in r)

    def __neg__(self):
        return IntMatrix([[-v for v in r] for r in self.rows])

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * v for v in r] for r in self.rows])

    def __add__(self, other):
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def kron(self, other) -> "IntMatrix":
        n, m = self.n, other.n
        return IntMatrix(
            [
                [self.rows[i // m][j // m] * other.rows[i % m][j % m] for j in range(n * m)]
                for i in range(n * m)
            ]
        )

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    @classmethod
    def identity(cls, n: int, c: int = 1) -> "IntMatrix":
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, a: int) -> "IntMatrix":
        return cls([[a]])

    def charpoly(self) -> list[int]:
        """Ascending coefficients of det(t*I - M), by Faddeev-LeVerrier.

        Every division is exact over Z, so the arithmetic stays integral.
        """
        n = self.n
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        A = IntMatrix.identity(n, 0)
        c = 1
        for k in range(1, n + 1):
            A = self @ (A + IntMatrix.identity(n, c)) if k > 1 else self
            tr = A.trace()
            assert tr % k == 0
            c = -tr // k
            coeffs[n - k] = c
        return coeffs


def det_mod(rows, p: int) -> int:
    """Determinant mod p by Gaussian elimination."""
    a = [[v % p for v in r] for r in rows]
    n = len(a)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col] % p
        inv = inv_mod(a[col][col], p)
        for r in range(col + 1, n):
            f = a[r][col] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return det % p


@dataclass(frozen=True)
class AlgebraicWitness:
    M: IntMatrix
    k: int
    m: int
    target: Residue

    @property
    def n(self) -> int:
        return self.M.n

    @property
    def p(self) -> int:
        return self.target.p

    def cost(self) -> int:
        return self.n + ceil_log2(max(self.m, self.k))

    def to_dict(self) -> dict:
        return {
            "p": _num(self.p),
            "target": _num(self.target.value),
            "k": _num(self.k),
            "n": self.n,
            "m": _num(self.m),
            "entries": [[_num(v) for v in r] for r in self.M.rows],
            "cost": self.cost(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "AlgebraicWitness":
        F = GF(int(d["p"]))
        return cls(IntMatrix(d["entries"]), int(d["k"]), int(d["m"]), F(int(d["target"])))

    @classmethod
    def from_json(cls, s: str) -> "AlgebraicWitness":
        return cls.from_dict(json.loads(s))


def _num(v: int):
    return str(v) if abs(v) >= JSON_SAFE else v


def verify_witness(w: AlgebraicWitness) -> bool:
    p = w.p
    if w.k < 1 or w.k % p == 0 or w.m < 0 or w.M.entry_bound() > w.m:
        return False
    lam = w.k * w.target.value
    rows = [[v - (lam if i == j else 0) for j, v in enumerate(r)] for i, r in enumerate(w.M.rows)]
    return det_mod(rows, p) == 0


def scalar_witness(x: Residue, a: int | None = None, k: int = 1) -> AlgebraicWitness:
    """1x1 witness [a] with multiplier k; a defaults to the signed representative of k*x."""
    if a is None:
        a = (x * k).signed()
    return AlgebraicWitness(IntMatrix.scalar(a), k, abs(a), x)


def _same_field(wa, wb):
    if wa.target.field != wb.target.field:
        raise FieldMismatch("witnesses live over different fields")


def witness_product(wa: AlgebraicWitness, wb: AlgebraicWitness) -> AlgebraicWitness:
    _same_field(wa, wb)
    return AlgebraicWitness(wa.M.kron(wb.M), wa.k * wb.k, wa.m * wb.m, wa.target * wb.target)


def witness_sum(wa: AlgebraicWitness, wb: AlgebraicWitness) -> AlgebraicWitness:
    _same_field(wa, wb)
    M = wa.M.kron(IntMatrix.identity(wb.n, wb.k)) + IntMatrix.identity(wa.n, wa.k).kron(wb.M)
    return AlgebraicWitness(M, wa.k * wb.k, wa.m * wb.k + wb.m * wa.k, wa.target + wb.target)


def witness_neg(w: AlgebraicWitness) -> AlgebraicWitness:
    return AlgebraicWitness(-w.M, w.k, w.m, -w.target)


def witness_inverse(w: AlgebraicWitness) -> AlgebraicWitness:
    """Witness for 1/x from the reversed characteristic polynomial of M.

    With c_i the coefficients of t^n * charpoly(1/t) and d the degree of that
    polynomial mod p, the d x d matrix with k*c_d on the superdiagonal and
    -k*c_0 .. -k*c_{d-1} on the last row has eigenvalue c_d / x.
    """
    if w.target.value == 0:
        raise ZeroTarget("0 has no inverse")
    p, k = w.p, w.k
    c = w.M.charpoly()[::-1]
    d = max(i for i, v in enumerate(c) if v % p)
    rows = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        rows[i][i + 1] = k * c[d]
    rows[d - 1] = [-k * c[j] for j in range(d)]
    M, mult = IntMatrix(rows), c[d]
    if mult < 0:
        M, mult = -M, -mult
    return AlgebraicWitness(M, mult, M.entry_bound(), w.target.field(inv_mod(w.target.value, p)))


def witness_poly_root(coeff_witnesses: list[AlgebraicWitness], x: Residue) -> AlgebraicWitness:
    """Witness for a root x of t^d + sum a_i t^i, given witnesses for a_0..a_{d-1}.

    Block companion matrix: K*I on the block superdiagonal and -M_i' along the
    last block row, where M_i' tensors M_i with k_j*I in every other slot and
    K is the product of the multipliers.
    """
    d = len(coeff_witnesses)
    if d < 1:
        raise ValueError("polynomial degree must be at least 1")
    for w in coeff_witnesses:
        if w.target.field != x.field:
            raise FieldMismatch("coefficient witness over a different field")
    value = reduce(lambda acc, w: acc * x + w.target, reversed(coeff_witnesses), x.field(1))
    if value.value:
        raise NotARoot(f"{x.value} is not a root mod {x.p}")
    K = prod(w.k for w in coeff_witnesses)
    sizes = [w.n for w in coeff_witnesses]
    N = prod(sizes)
    blocks = []
    for i, wi in enumerate(coeff_witnesses):
        factors = [wi.M if j == i else IntMatrix.identity(sizes[j], wj.k) for j, wj in enumerate(coeff_witnesses)]
        blocks.append(reduce(IntMatrix.kron, factors))
    rows = [[0] * (d * N) for _ in range(d * N)]
    for b in range(d - 1):
        for r in range(N):
            rows[b * N + r][(b + 1) * N + r] = K
    for b, Mi in enumerate(blocks):
        for r in range(N):
            for c in range(N):
                rows[(d - 1) * N + r][b * N + c] = -Mi.rows[r][c]
    bound = max(wi.m * (K // wi.k) for wi in coeff_witnesses)
    if d > 1:
        bound = max(bound, K)
    return AlgebraicWitness(IntMatrix(rows), K, bound, x)
