"""Signed-fraction height of a residue.

``f_q(x)`` is the least ``max(n, m)`` over naturals n, m >= 1 such that
x = n/m or x = -n/m in F_p.  Two routes compute it: an exhaustive sweep
(``f_q_oracle``) and a Euclidean remainder-sequence scan (``f_q_fast``).
Both return the same witness under the tie-break "smallest n, then +".
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import isqrt

import numpy as np

from .field import PrimeField, Residue, inv_mod


@dataclass(frozen=True)
class RationalWitness:
    n: int
    m: int
    sign: int = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 0 or self.sign not in (1, -1):
            raise ValueError(f"malformed witness {self}")

    @property
    def height(self) -> int:
        return max(self.n, self.m)

    def residue(self, F: PrimeField) -> Residue:
        return F(self.sign * self.n * inv_mod(self.m, F.p))

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.n}/{self.m}"


def witness_holds(x: Residue, w: RationalWitness) -> bool:
    return (w.sign * w.n - x.value * w.m) % x.p == 0


@lru_cache(maxsize=256)
def _oracle_table(p: int):
    """Exhaustive sweep in tie-break order: (height, n, sign) ascending.

    Heights up to ceil(sqrt(p)) always suffice (a box of side 2*sqrt(p)
    meets the lattice {(n, m): n = x*m mod p} by Minkowski), but the bound
    is re-checked and widened if a residue is ever left uncovered.
    """
    T = isqrt(p) + 1
    while True:
        n = np.arange(0, T + 1, dtype=np.int64)
        m = np.arange(1, T + 1, dtype=np.int64)
        N, M = np.meshgrid(n, m, indexing="ij")
        N, M = N.ravel(), M.ravel()
        minv = np.array([pow(int(v), -1, p) for v in range(1, T + 1)], dtype=np.int64)
        pos = (N % p) * minv[M - 1] % p
        res = np.concatenate([pos, (-pos) % p])
        NN = np.concatenate([N, N])
        MM = np.concatenate([M, M])
        sign = np.concatenate([np.zeros_like(N), np.ones_like(N)])
        height = np.maximum(NN, MM)
        order = np.lexsort((sign, NN, height))
        res_sorted = res[order]
        uniq, first = np.unique(res_sorted, return_index=True)
        if len(uniq) == p:
            pick = order[first]
            return (
                height[pick].astype(object),
                NN[pick].astype(object),
                MM[pick].astype(object),
                np.where(sign[pick] == 0, 1, -1).astype(object),
            )
        T *= 2


def f_q_oracle(x: Residue) -> tuple[int, RationalWitness]:
    h, n, m, s = _oracle_table(x.p)
    v = x.value
    return int(h[v]), RationalWitness(int(n[v]), int(m[v]), int(s[v]))


def fq_values(F: PrimeField) -> np.ndarray:
    """Oracle heights of every residue of F, indexed by value."""
    return _oracle_table(F.p)[0].astype(np.int64)


def _remainder_sequence(p: int, x: int):
    """Pairs (r, t) with r = t*x mod p from the extended Euclidean algorithm on (p, x)."""
    r0, t0, r1, t1 = p, 0, x, 1
    seq = [(r0, t0), (r1, t1)]
    while r1:
        q = r0 // r1
        r0, t0, r1, t1 = r1, t1, r0 - q * r1, t0 - q * t1
        seq.append((r1, t1))
    return seq


def f_q_fast(x: Residue) -> tuple[int, RationalWitness]:
    p, v = x.p, x.value
    seq = _remainder_sequence(p, v)
    norms = [max(abs(r), abs(t)) for r, t in seq]
    j = min(range(1, len(seq)), key=norms.__getitem__)
    # Every point of minimal max-norm is a small combination of a consecutive
    # basis pair adjacent to the minimum; collect them all for the tie-break.
    cands = []
    for i in (j - 1, j):
        if i < 0 or i + 1 >= len(seq):
            continue
        (r1, t1), (r2, t2) = seq[i], seq[i + 1]
        for a in range(-3, 4):
            for b in range(-3, 4):
                n, m = a * r1 + b * r2, a * t1 + b * t2
                if m < 0:
                    n, m = -n, -m
                if m >= 1:
                    cands.append((max(abs(n), m), abs(n), 0 if n >= 0 else 1, m))
    best = min(cands)
    height, n, sgn, m = best
    w = RationalWitness(n, m, 1 if sgn == 0 else -1)
    assert witness_holds(x, w)
    return height, w


@dataclass
class BoundReport:
    p: int
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def check_fq_bounds(F: PrimeField) -> BoundReport:
    """Exhaustive check of the four height inequalities over all pairs of F."""
    p = F.p
    f = fq_values(F)
    a = np.arange(p)
    A, B = np.meshgrid(a, a, indexing="ij")
    fa, fb = f[A], f[B]
    report = BoundReport(p=p, pairs_checked=p * p)
    bad_sum = f[(A + B) % p] > 2 * fa * fb
    bad_prod = f[(A * B) % p] > fa * fb
    for law, mask in (("sum", bad_sum), ("product", bad_prod)):
        for i, j in zip(*np.nonzero(mask)):
            report.violations.append({"law": law, "a": int(i), "b": int(j)})
    for i in np.nonzero(f[(-a) % p] != f)[0]:
        report.violations.append({"law": "negation", "a": int(i), "b": None})
    invs = np.array([0] + [pow(int(v), -1, p) for v in range(1, p)])
    for i in np.nonzero(f[invs[1:]] != f[1:])[0]:
        report.violations.append({"law": "inverse", "a": int(i) + 1, "b": None})
    return report
