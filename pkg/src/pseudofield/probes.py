"""Finite probes of the order and solvability formulas over F_p.

Every probe quantifies over S_B = {x : oracle value of x is < B}, where the
oracle value is only trusted up to the search budget; hence B <= budget + 1.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from itertools import product

import numpy as np

from .errors import BadModulus, EnumerationTooLarge
from .field import PrimeField
from .search import level_map

ENUM_CEILING = 10**6
SCAN_LIMIT = 10**4


def squares_table(p: int) -> np.ndarray:
    sq = np.zeros(p, dtype=bool)
    sq[(np.arange(p, dtype=np.int64) ** 2) % p] = True
    return sq


def low_set(F: PrimeField, B: int, budget: int, **kw) -> np.ndarray:
    """Sorted residues with oracle value < B."""
    if B > budget + 1:
        raise ValueError(f"threshold {B} exceeds what budget {budget} can certify")
    if B <= 1:
        return np.zeros(0, dtype=np.int64)
    lm = level_map(F, min(budget, B - 1), **kw)
    return np.nonzero((lm > 0) & (lm < B))[0]


def phi2_counterexample(F: PrimeField, B: int, budget: int, **kw):
    """Lexicographically least (x, y) in S^2 with x^2 + y^2 a non-square, or None."""
    p = F.p
    S = low_set(F, B, budget, **kw)
    if not len(S):
        return None
    sq = squares_table(p)
    s2 = S * S % p
    bad = ~sq[(s2[:, None] + s2[None, :]) % p]
    if not bad.any():
        return None
    i, j = np.argwhere(bad)[0]
    return int(S[i]), int(S[j])


def phi2_check(F: PrimeField, B: int, budget: int, **kw) -> bool:
    return phi2_counterexample(F, B, budget, **kw) is None


def _rootable_constants(F: PrimeField, upper) -> np.ndarray:
    """Boolean mask over a_0: does x^d + upper(x) + a_0 have a root in F_p."""
    p = F.p
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(upper):  # upper = (a_1, ..., a_{d-1}, 1)
        vals = (vals * xs + c) % p
    vals = vals * xs % p
    mask = np.zeros(p, dtype=bool)
    mask[(-vals) % p] = True
    return mask


def phi_d_counterexample(F: PrimeField, B: int, d: int, budget: int, complex_case: bool = False, *, ceiling: int = ENUM_CEILING, **kw):
    """Least coefficient tuple (a_0, ..., a_{d-1}) over S whose monic polynomial has no root."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    if d % 2 == 0 and not complex_case:
        raise ValueError("even degree only makes sense in the complex case")
    S = low_set(F, B, budget, **kw)
    if not len(S):
        return None
    if len(S) ** d > ceiling:
        raise EnumerationTooLarge(f"|S|^d = {len(S)}^{d} exceeds {ceiling}")
    p = F.p
    best = None
    for rest in product(S.tolist(), repeat=d - 1):
        if p <= SCAN_LIMIT:
            ok = _rootable_constants(F, list(rest) + [1])
            failing = S[~ok[S]]
            a0 = int(failing[0]) if len(failing) else None
        else:
            from .modpoly import has_root_mod_p

            a0 = next((int(a) for a in S if not has_root_mod_p([int(a), *rest, 1], p)), None)
        if a0 is not None:
            cand = (a0, *rest)
            if best is None or cand < best:
                best = cand
    return best


def phi_d_check(F: PrimeField, B: int, d: int, budget: int, complex_case: bool = False, **kw) -> bool:
    return phi_d_counterexample(F, B, d, budget, complex_case, **kw) is None


@dataclass
class ThresholdReport:
    p: int
    d: int
    budget: int
    complex_case: bool
    max_satisfying: int | None
    witnesses_of_failure: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    def __post_init__(self):
        self.assert_downward_closed()

    def assert_downward_closed(self):
        verdicts = [r["holds"] for r in self.rows]
        if any(later and not earlier for earlier, later in zip(verdicts, verdicts[1:])):
            raise AssertionError(f"threshold verdicts not downward closed: {verdicts}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "d", "budget", "B", "holds", "implied", "counterexample"])
        for r in self.rows:
            ce = r["counterexample"]
            w.writerow([self.p, self.d, self.budget, r["B"], int(r["holds"]), int(r["implied"]),
                        "" if ce is None else " ".join(map(str, ce))])
        return buf.getvalue()


def max_threshold(F: PrimeField, d: int, budget: int, complex_case: bool = False, *, ceiling: int = ENUM_CEILING, **kw) -> ThresholdReport:
    """Verdict for every threshold B = 0..budget and the largest satisfying one.

    d = 2 outside the complex case means the sum-of-two-squares formula.
    A threshold too large to enumerate is recorded as an implied failure
    when a smaller threshold already failed; otherwise the refusal propagates.
    """
    rows, failures = [], []
    for B in range(0, budget + 1):
        implied = False
        try:
            if d == 2 and not complex_case:
                ce = phi2_counterexample(F, B, budget, **kw)
            else:
                ce = phi_d_counterexample(F, B, d, budget, complex_case, ceiling=ceiling, **kw)
        except EnumerationTooLarge:
            if not failures:
                raise
            ce, implied = None, True
        holds = ce is None and not implied
        if ce is not None:
            failures.append(list(ce))
        rows.append({"B": B, "holds": holds, "implied": implied, "counterexample": None if ce is None else list(ce)})
    sat = [r["B"] for r in rows if r["holds"]]
    return ThresholdReport(F.p, d, budget, complex_case, max(sat) if sat else None, failures[:1], rows)


def psi_check(F: PrimeField, n: int, budget: int, **kw) -> bool:
    """Is some residue's oracle value exactly n."""
    if n > budget:
        raise ValueError("level above the budget cannot be certified")
    if n < 1:
        return False
    return bool((level_map(F, n, **kw) == n).any())


def order_axioms(F: PrimeField) -> dict:
    """Totality and antisymmetry of the square order, exhaustively."""
    p = F.p
    sq = squares_table(p)
    a = np.arange(p)
    D = (a[None, :] - a[:, None]) % p  # D[i, j] = j - i, i.e. i <= j iff sq[D]
    le = sq[D]
    total = bool((le | le.T).all())
    both = le & le.T & (D != 0)
    anti = None
    if both.any():
        i, j = np.argwhere(both)[0]
        anti = (int(i), int(j))
    return {"p": p, "total": total, "antisymmetric": anti is None, "antisymmetry_counterexample": anti}


def transitivity_counterexample(F: PrimeField):
    """Least (a, b, c) with a <= b <= c but not a <= c, or None."""
    p = F.p
    sq = squares_table(p)
    for a in range(p):
        for b in range(p):
            if not sq[(b - a) % p]:
                continue
            for c in range(p):
                if sq[(c - b) % p] and not sq[(c - a) % p]:
                    return a, b, c
    return None


@dataclass
class TransitivityResult:
    holds: bool
    skipped: bool = False
    diagnostic: str = ""
    triples_checked: int = 0
    counterexample: tuple | None = None

    def __bool__(self):
        return self.holds


def guarded_transitivity_check(F: PrimeField, B: int, budget: int, **kw) -> TransitivityResult:
    """a <= a + x^2 <= a + x^2 + y^2 implies a <= c, for x, y in S_B, when the
    two-squares formula holds at B (which is exactly what the argument uses)."""
    p = F.p
    if p % 4 != 3:
        raise BadModulus(f"p = {p} is not 3 mod 4")
    ce = phi2_counterexample(F, B, budget, **kw)
    if ce is not None:
        return TransitivityResult(True, True, f"sum-of-squares guard fails at B={B}: {ce}")
    S = low_set(F, B, budget, **kw)
    sq = squares_table(p)
    a = np.arange(p, dtype=np.int64)
    s2 = S * S % p
    checked, bad = 0, None
    for xx in s2:
        b = (a + xx) % p
        c = (b[:, None] + s2[None, :]) % p
        viol = ~sq[(c - a[:, None]) % p]
        checked += viol.size
        if viol.any() and bad is None:
            i, j = np.argwhere(viol)[0]
            bad = (int(a[i]), int(b[i]), int(c[i, j]))
    return TransitivityResult(bad is None, False, "", checked, bad)
