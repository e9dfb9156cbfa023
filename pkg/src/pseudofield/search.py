"""Exhaustive budget-bounded search for minimal-cost eigenvalue witnesses.

The search walks cost c = 1, 2, ... and inside each cost the cells
(n, m, k) in the fixed order n, then m, then k, and inside a cell the
matrices with max |entry| == m in row-major lexicographic order over
[-m, m].  Matrices are never tested one at a time: each (n, m) cell is
reduced once to its distinct characteristic polynomials, each tagged with
the lexicographically first matrix that produces it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .algebraic import AlgebraicWitness, IntMatrix, ceil_log2
from .deadline import check
from .errors import BudgetTooLarge
from .field import PrimeField, Residue

MAX_BUDGET = 6
CELL_CEILING = 10**7
_CHUNK = 1 << 18


class Restriction(Enum):
    UNRESTRICTED = "unrestricted"
    STANDARD_SMALL_BOUND = "standard_small_bound"
    EXACTLY_ONE = "exactly_one"


@dataclass(frozen=True)
class VariantSpec:
    size: Restriction = Restriction.UNRESTRICTED
    denominator: Restriction = Restriction.UNRESTRICTED
    entries: Restriction = Restriction.UNRESTRICTED
    small_bound: int = 2

    def __post_init__(self):
        for name in ("size", "denominator", "entries"):
            object.__setattr__(self, name, Restriction(getattr(self, name)))
        if Restriction.UNRESTRICTED not in (self.size, self.denominator, self.entries):
            raise ValueError("at least one axis must stay unrestricted")

    def cap(self, axis: str) -> int | None:
        r = getattr(self, axis)
        if r is Restriction.EXACTLY_ONE:
            return 1
        if r is Restriction.STANDARD_SMALL_BOUND:
            return self.small_bound
        return None


UNRESTRICTED = VariantSpec()


def _cells(c: int, variant: VariantSpec):
    """(n, m, k) with n + ceil_log2(max(m, k)) == c, in search order."""
    ncap, kcap, mcap = variant.cap("size"), variant.cap("denominator"), variant.cap("entries")
    for n in range(1, c + 1):
        if ncap is not None and n > ncap:
            break
        L = c - n
        top = 2**L
        for m in range(0, top + 1):
            if mcap is not None and m > mcap:
                break
            for k in range(1, top + 1):
                if kcap is not None and k > kcap:
                    break
                if ceil_log2(max(m, k, 1)) == L:
                    yield n, m, k


def _decode(index: int, n: int, m: int) -> IntMatrix:
    base = 2 * m + 1
    digits = []
    for _ in range(n * n):
        index, d = divmod(index, base)
        digits.append(d - m)
    digits.reverse()
    return IntMatrix([digits[i * n : (i + 1) * n] for i in range(n)])


def _batch_charpoly(mats: np.ndarray) -> np.ndarray:
    """Faddeev-LeVerrier on a stack of integer matrices; ascending coefficients."""
    count, n, _ = mats.shape
    out = np.zeros((count, n + 1), dtype=np.int64)
    out[:, n] = 1
    if n == 1:
        out[:, 0] = -mats[:, 0, 0]
        return out
    if n == 2:
        out[:, 1] = -(mats[:, 0, 0] + mats[:, 1, 1])
        out[:, 0] = mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]
        return out
    if n == 3:
        a = mats
        out[:, 2] = -(a[:, 0, 0] + a[:, 1, 1] + a[:, 2, 2])
        out[:, 1] = (
            a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]
            + a[:, 0, 0] * a[:, 2, 2] - a[:, 0, 2] * a[:, 2, 0]
            + a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1]
        )
        det = (
            a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
            - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
            + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
        )
        out[:, 0] = -det
        return out
    eye = np.eye(n, dtype=np.int64)
    A = mats.copy()
    for k in range(1, n + 1):
        if k > 1:
            A = mats @ (A + out[:, n - k + 1, None, None] * eye)
        tr = np.trace(A, axis1=1, axis2=2)
        out[:, n - k] = -tr // k
    return out


def _poly_keys(cp: np.ndarray, n: int, m: int):
    """Injective scalar key per charpoly row, so np.unique can run on 1-D data."""
    C = (n * max(m, 1)) ** n  # sum of j x j principal minors is at most (n*m)^j
    width = 2 * C + 1
    if width ** n >= 2**62:
        return np.unique(cp, axis=0, return_inverse=True)[1].ravel()
    key = np.zeros(len(cp), dtype=np.int64)
    for j in range(n):
        key = key * width + (cp[:, j] + C)
    return key


@lru_cache(maxsize=None)
def cell_polys(n: int, m: int, ceiling: int = CELL_CEILING):
    """Distinct charpolys of n x n matrices with max |entry| == m.

    Returns (polys, first_index) sorted by first_index, where first_index is
    the lexicographic rank of the first matrix realizing each polynomial.
    """
    base = 2 * m + 1
    total = base ** (n * n)
    if total > ceiling:
        raise BudgetTooLarge(f"cell n={n}, m={m} has {total} matrices (ceiling {ceiling})")
    polys, firsts = [], []
    powers = base ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        digits = (idx[:, None] // powers) % base - m
        keep = np.abs(digits).max(axis=1) == m
        if not keep.any():
            continue
        cp = _batch_charpoly(digits[keep].reshape(-1, n, n))
        _, first = np.unique(_poly_keys(cp, n, m), return_index=True)
        polys.append(cp[first])
        firsts.append(idx[keep][first])
    if not polys:
        return np.zeros((0, n + 1), dtype=np.int64), np.zeros(0, dtype=np.int64)
    allp, allf = np.concatenate(polys), np.concatenate(firsts)
    order = np.argsort(allf, kind="stable")
    allp, allf = allp[order], allf[order]
    _, keep = np.unique(_poly_keys(allp, n, m), return_index=True)
    keep.sort()
    return allp[keep], allf[keep]


def _eval_mod(polys: np.ndarray, lam, p: int) -> np.ndarray:
    """Evaluate each row (ascending) at every lam mod p; shape (len(polys), len(lam))."""
    lam = np.atleast_1d(np.asarray(lam, dtype=object if p > 3_000_000_000 else np.int64))
    P = polys.astype(object) % p if p > 3_000_000_000 else polys % p
    acc = np.zeros((len(P), len(lam)), dtype=lam.dtype)
    for j in range(P.shape[1] - 1, -1, -1):
        acc = (acc * lam[None, :] + P[:, j, None]) % p
    return acc


def _check_budget(budget: int, max_budget: int):
    if budget > max_budget:
        raise BudgetTooLarge(f"budget {budget} exceeds the search ceiling {max_budget}")


def f_variant_oracle(
    x: Residue,
    budget: int,
    variant: VariantSpec = UNRESTRICTED,
    *,
    max_budget: int = MAX_BUDGET,
    cell_ceiling: int = CELL_CEILING,
    deadline=None,
) -> tuple[int, AlgebraicWitness] | None:
    _check_budget(budget, max_budget)
    p = x.p
    for c in range(1, budget + 1):
        for n, m, k in _cells(c, variant):
            if k % p == 0:
                continue
            check(deadline, "witness search")
            polys, firsts = cell_polys(n, m, cell_ceiling)
            if not len(polys):
                continue
            hits = np.nonzero(_eval_mod(polys, [k * x.value % p], p)[:, 0] == 0)[0]
            if len(hits):
                M = _decode(int(firsts[hits[0]]), n, m)
                return c, AlgebraicWitness(M, k, m, x)
    return None


def f_qbar_oracle(x: Residue, budget: int, **kw) -> tuple[int, AlgebraicWitness] | None:
    return f_variant_oracle(x, budget, UNRESTRICTED, **kw)


@lru_cache(maxsize=1024)
def _cell_roots(n: int, m: int, p: int, ceiling: int) -> np.ndarray:
    polys, _ = cell_polys(n, m, ceiling)
    if not len(polys):
        return np.zeros(0, dtype=np.int64)
    lam = np.arange(p, dtype=np.int64)
    zero = np.zeros(p, dtype=bool)
    for start in range(0, len(polys), 256):
        zero |= (_eval_mod(polys[start : start + 256], lam, p) == 0).any(axis=0)
    return np.nonzero(zero)[0]


def level_map(
    F: PrimeField,
    budget: int,
    variant: VariantSpec = UNRESTRICTED,
    *,
    max_budget: int = MAX_BUDGET,
    cell_ceiling: int = CELL_CEILING,
    deadline=None,
) -> np.ndarray:
    """Oracle value of every residue of F (0 where nothing fits the budget).

    Agrees with ``f_variant_oracle`` pointwise; stops as soon as every
    residue has a value, so cells beyond that point are never built.
    """
    _check_budget(budget, max_budget)
    p = F.p
    out = np.zeros(p, dtype=np.int64)
    for c in range(1, budget + 1):
        for n, m, k in _cells(c, variant):
            if (out > 0).all():
                return out
            if k % p == 0:
                continue
            check(deadline, "level map")
            roots = _cell_roots(n, m, p, cell_ceiling)
            xs = roots * pow(k, -1, p) % p
            fresh = xs[out[xs] == 0]
            out[fresh] = c
    return out
