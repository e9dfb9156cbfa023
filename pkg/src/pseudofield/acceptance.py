"""The acceptance suite behind ``pseudofield selftest``.

Each check returns a CriterionResult.  The report is a pure function of the
fixed seeds; timings are kept apart so two runs produce identical reports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .algebraic import (
    AlgebraicWitness,
    IntMatrix,
    scalar_witness,
    verify_witness,
    witness_inverse,
    witness_neg,
    witness_poly_root,
    witness_product,
    witness_sum,
)
from .errors import EnumerationTooLarge
from .field import GF, is_prime
from .modpoly import ModPoly, coprime_lift, gcd_mod_l, monic_multiple
from .numberfield import QuadraticField
from .poly import HomogeneousForm, IntPoly, form_resultant, resultant_cofactors, sylvester_resultant
from .probes import guarded_transitivity_check, max_threshold, order_axioms, phi2_counterexample
from .rational import check_fq_bounds, f_q_fast, f_q_oracle, witness_holds
from .search import f_qbar_oracle
from .units import RationalInterval, express_in_ideal, ideal_cover, ideal_power_generator, res_one_in_interval, unit_value_alg_integer

SEED = 20240601
WITNESS_PRIMES = (7, 13, 199, 1009)


@dataclass
class CriterionResult:
    id: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.id:2d} {self.name}: {self.detail}"

    def to_dict(self) -> dict:
        return {"id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail}


def primes_upto(n: int) -> list[int]:
    """Odd primes up to n."""
    return [p for p in range(3, n + 1) if is_prime(p)]


# --- 1-4: reconstruction ----------------------------------------------------


def check_fq_example() -> CriterionResult:
    x = GF(13)(7)
    value, w = f_q_fast(x)
    best = min(_timed(lambda: f_q_fast(x)) for _ in range(50))
    ok = value == 2 and (w.n, w.m, w.sign) == (1, 2, 1) and witness_holds(x, w) and best < 1e-3
    return CriterionResult(1, "f_Q(7) in F_13", ok, f"value={value} witness={w} under_1ms={best < 1e-3}")


def _timed(fn) -> float:
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def check_fqbar_example() -> CriterionResult:
    x = GF(199)(10)
    t = time.perf_counter()
    found = f_qbar_oracle(x, 4)
    none_below = f_qbar_oracle(x, 2) is None
    elapsed = time.perf_counter() - t
    ok = found is not None and found[0] == 3 and verify_witness(found[1]) and found[1].cost() == 3 and none_below and elapsed < 5
    entries = found[1].M.rows if found else None
    return CriterionResult(2, "f_Qbar(10) in F_199", ok, f"value={found and found[0]} entries={entries} k={found and found[1].k} "
                           f"no_cost_le_2={none_below} under_5s={elapsed < 5}")


def check_oracle_equivalence(limit: int = 997) -> CriterionResult:
    t = time.perf_counter()
    bad, total = [], 0
    for p in primes_upto(limit):
        F = GF(p)
        for x in range(p):
            total += 1
            if f_q_fast(F(x)) != f_q_oracle(F(x)):
                bad.append((p, x))
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    return CriterionResult(3, "f_q_fast == f_q_oracle, p <= 997", ok, f"residues={total} discrepancies={len(bad)} under_60s={elapsed < 60}")


def check_fq_bound_suite(limit: int = 199) -> CriterionResult:
    pairs = violations = 0
    for p in primes_upto(limit):
        rep = check_fq_bounds(GF(p))
        pairs += rep.pairs_checked
        violations += len(rep.violations)
    return CriterionResult(4, "f_Q inequalities, p <= 199", violations == 0, f"pairs={pairs} violations={violations}")


# --- 5: witness algebra -----------------------------------------------------


def random_leaf(rng, F) -> AlgebraicWitness:
    """A small random matrix with one of its scaled eigenvalues as target."""
    p = F.p
    while True:
        n = int(rng.integers(1, 3))
        m = int(rng.integers(0, 4))
        k = int(rng.integers(1, 5))
        if k % p == 0:
            continue
        M = IntMatrix([[int(v) for v in rng.integers(-m, m + 1, size=n)] for _ in range(n)])
        cp = M.charpoly()
        roots = [lam for lam in range(p) if sum(c * pow(lam, i, p) for i, c in enumerate(cp)) % p == 0]
        if roots:
            lam = roots[int(rng.integers(0, len(roots)))]
            return AlgebraicWitness(M, k, max(M.entry_bound(), 0), F(lam * pow(k, -1, p)))


def _poly_root_case(rng, F):
    d = int(rng.integers(1, 4))
    x = F(int(rng.integers(0, F.p)))
    upper = [random_leaf(rng, F) for _ in range(d - 1)]
    acc = x ** d if d else F(1)
    for i, w in enumerate(upper, start=1):
        acc = acc + w.target * x**i
    a0 = scalar_witness(-acc)
    coeffs = [a0] + upper
    return coeffs, x


def check_witness_algebra(per_construction: int = 500, seed: int = SEED) -> CriterionResult:
    rng = np.random.default_rng(seed)
    counts = {"product": 0, "sum": 0, "neg": 0, "inverse": 0, "poly_root": 0}
    bad = []
    for name in counts:
        for i in range(per_construction):
            F = GF(WITNESS_PRIMES[i % len(WITNESS_PRIMES)])
            if name == "product":
                a, b = random_leaf(rng, F), random_leaf(rng, F)
                w, bound = witness_product(a, b), a.cost() * b.cost()
            elif name == "sum":
                a, b = random_leaf(rng, F), random_leaf(rng, F)
                w, bound = witness_sum(a, b), a.cost() * b.cost() + 1
            elif name == "neg":
                a = random_leaf(rng, F)
                w, bound = witness_neg(a), a.cost()
                if w.cost() != a.cost():
                    bad.append((name, i))
            elif name == "inverse":
                a = random_leaf(rng, F)
                while a.target.value == 0:
                    a = random_leaf(rng, F)
                w, bound = witness_inverse(a), 2 * a.cost() ** 2 + a.cost()
            else:
                coeffs, x = _poly_root_case(rng, F)
                w = witness_poly_root(coeffs, x)
                bound = len(coeffs) * int(np.prod([c.cost() for c in coeffs]))
            counts[name] += 1
            if not verify_witness(w) or w.cost() > bound:
                bad.append((name, i))
    detail = " ".join(f"{k}={v}" for k, v in counts.items()) + f" violations={len(bad)}"
    return CriterionResult(5, "witness algebra", not bad, detail)


# --- 6-7: probes ------------------------------------------------------------


def check_order_probes(limit: int = 200, budget: int = 3) -> CriterionResult:
    primes = [p for p in primes_upto(limit) if p % 4 == 3]
    axioms = [order_axioms(GF(p)) for p in primes]
    broken = [r["p"] for r in axioms if not (r["total"] and r["antisymmetric"])]
    ce13 = order_axioms(GF(13))["antisymmetry_counterexample"]
    guard_fail, guarded = [], 0
    for p in primes:
        for B in range(0, budget + 1):
            res = guarded_transitivity_check(GF(p), B, budget)
            if not res.skipped:
                guarded += 1
                if not res.holds:
                    guard_fail.append((p, B))
    ok = not broken and ce13 is not None and not guard_fail
    return CriterionResult(6, "order probes", ok, f"primes_3mod4={len(primes)} axiom_failures={len(broken)} "
                           f"p13_counterexample={ce13} guarded_runs={guarded} guarded_failures={len(guard_fail)}")


def check_phi2_and_thresholds(limit: int = 199, budget: int = 3) -> CriterionResult:
    ce = phi2_counterexample(GF(3), 2, 2)
    reports = refused = broken = 0
    for p in primes_upto(limit):
        for d in (2, 3):
            try:
                max_threshold(GF(p), d, budget)
            except EnumerationTooLarge:
                refused += 1
                continue
            except AssertionError:
                broken += 1
                continue
            reports += 1
    ok = ce == (1, 1) and broken == 0 and reports > 0
    return CriterionResult(7, "phi_2 probe and threshold closure", ok,
                           f"phi2(3,2)_counterexample={ce} reports={reports} refused={refused} not_closed={broken}")


# --- 8-10: toolkit ----------------------------------------------------------


def _random_modpoly(rng, ell, e, degree, monic=False):
    q = ell**e
    cs = [int(v) for v in rng.integers(0, q, size=degree + 1)]
    if monic:
        cs[-1] = 1
    return ModPoly(ell, e, cs)


def check_hensel(count: int = 200, seed: int = SEED + 8) -> CriterionResult:
    rng = np.random.default_rng(seed)
    failures = mm = cl = 0
    for i in range(count):
        ell = (2, 3, 5, 7)[i % 4]
        e = int(rng.integers(1, 6))
        if i % 2 == 0:
            # monic_multiple: unit leading coefficient mod l, junk above it divisible by l
            d = int(rng.integers(0, 6))
            low = [int(v) for v in rng.integers(0, ell**e, size=d)]
            lead = int(rng.integers(1, ell))
            high = [ell * int(v) for v in rng.integers(0, ell ** max(e - 1, 1), size=int(rng.integers(0, 7 - d)))]
            u = ModPoly(ell, e, low + [lead] + high)
            v = monic_multiple(u)
            w = (ModPoly(ell, e, [1]) + v * ell) * u
            mm += 1
            if not (w.is_monic() and w.degree == d):
                failures += 1
        else:
            while True:
                d1 = int(rng.integers(1, 4))
                d2 = int(rng.integers(1, 7 - d1))
                r1 = _random_modpoly(rng, ell, 1, d1, monic=True)
                r2 = _random_modpoly(rng, ell, 1, d2, monic=True)
                if gcd_mod_l(r1, r2, ell).degree == 0:
                    break
            R1 = ModPoly(ell, e, r1.coeffs) + ModPoly(ell, e, [ell * int(c) for c in rng.integers(0, ell**e, size=d1)])
            R2 = ModPoly(ell, e, r2.coeffs) + ModPoly(ell, e, [ell * int(c) for c in rng.integers(0, ell**e, size=d2)])
            w = R1 * R2
            a, b = coprime_lift(w, r1, r2)
            cl += 1
            ok = (a * b == w and a.is_strictly_monic() and b.is_strictly_monic()
                  and ModPoly(ell, 1, a.coeffs) == r1 and ModPoly(ell, 1, b.coeffs) == r2)
            failures += not ok
    return CriterionResult(8, "Hensel suite", failures == 0, f"monic_multiple={mm} coprime_lift={cl} failures={failures}")


def _random_form(rng, degree, bound=10):
    while True:
        cs = [int(v) for v in rng.integers(-bound, bound + 1, size=degree + 1)]
        if any(cs):
            return HomogeneousForm(degree, cs)


def cover_element(rng, p, q, cover, degree):
    """A form of the given degree lying in every cover ideal of (p, q).

    Per prime l: res/l^e times the product of that prime's descriptor forms
    times a random cofactor; plus res times a random form.
    """
    res = abs(form_resultant(p, q))
    h = _random_form(rng, degree, 5) * HomogeneousForm(0, [res])
    for ell in sorted({d.ell for d in cover}):
        ds = [d for d in cover if d.ell == ell]
        g = HomogeneousForm(0, [res // ell ** ds[0].exponent])
        for d in ds:
            g = g * d.form()
        if g.degree <= degree:
            h = h + g * _random_form(rng, degree - g.degree, 5)
    return h


def check_ap_bq(count: int = 100, seed: int = SEED + 9) -> CriterionResult:
    rng = np.random.default_rng(seed)
    failures = descriptors = 0
    for _ in range(count):
        while True:
            p = _random_form(rng, int(rng.integers(1, 5)))
            q = _random_form(rng, int(rng.integers(1, 5)))
            if form_resultant(p, q) != 0:
                break
        cover = ideal_cover(p, q)
        descriptors += len(cover)
        if not all(d.contains(p, 1) and d.contains(q, 1) for d in cover):
            failures += 1
            continue
        D = max(p.degree + q.degree - 1, sum(d.r.degree for d in cover)) + int(rng.integers(0, 3))
        h = cover_element(rng, p, q, cover, D)
        if not all(d.contains(h) for d in cover):
            failures += 1
            continue
        a, b = express_in_ideal(h, p, q, cover)
        if a * p + b * q != h:
            failures += 1
    return CriterionResult(9, "ap+bq suite", failures == 0, f"pairs={count} descriptors={descriptors} failures={failures}")


def _random_poly(rng, lo=1, hi=4, bound=9):
    while True:
        d = int(rng.integers(lo, hi + 1))
        cs = [int(v) for v in rng.integers(-bound, bound + 1, size=d + 1)]
        if cs[-1]:
            return IntPoly(cs)


def check_resultant_laws(count: int = 200, seed: int = SEED + 10) -> CriterionResult:
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(count):
        f, g, h = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        mult = sylvester_resultant(f * g, h) == sylvester_resultant(f, h) * sylvester_resultant(g, h)
        swap = sylvester_resultant(g, f) == (-1) ** (f.degree * g.degree) * sylvester_resultant(f, g)
        r = sylvester_resultant(f, g)
        if r:
            a, b = resultant_cofactors(f, g)
            ideal = a * f + b * g == IntPoly([r])
        else:
            ideal = True
        failures += not (mult and swap and ideal)
    return CriterionResult(10, "resultant laws", failures == 0, f"instances={count} failures={failures}")


# --- 11-12: unit values -----------------------------------------------------


def check_unit_pipeline() -> CriterionResult:
    p = IntPoly([1, 0, 1])
    q, (lo, hi) = res_one_in_interval(p, RationalInterval(1, 2))
    ok_q = q.is_monic() and abs(sylvester_resultant(p, q)) == 1 and q(lo) * q(hi) < 0 and (lo, hi) == (1, 2)
    res = unit_value_alg_integer([IntPoly([0, 1])], RationalInterval(1, 2))
    mp = res.alpha.minpoly
    ok_a = (abs(mp.coeffs[0]) == 1 and abs(sylvester_resultant(mp, IntPoly([0, 1]))) == 1
            and res.alpha.sturm_count() == 1 and 1 <= res.alpha.interval.lo < res.alpha.interval.hi <= 2)
    return CriterionResult(11, "unit-value pipeline", ok_q and ok_a,
                           f"q={list(q.coeffs)} res={sylvester_resultant(p, q)} alpha_minpoly={list(mp.coeffs)} sturm={res.alpha.sturm_count()}")


def check_ideal_power() -> CriterionResult:
    K = QuadraticField(-5)
    r = ideal_power_generator(K, [(2, 0), (1, 1)])
    two = K.ideal([(2, 0)])
    gen = K.ideal([r.value])
    both = all(two.contains(b) for b in gen.elements()) and all(gen.contains(b) for b in two.elements())
    ok = r.exponent == 2 and r.binary_form().degree == 2 and both
    return CriterionResult(12, "ideal power generator in Q(sqrt -5)", ok,
                           f"exponent={r.exponent} form={r.binary_form().format()} value={r.value} generates_<2>={both}")


CHECKS = {
    1: check_fq_example,
    2: check_fqbar_example,
    3: check_oracle_equivalence,
    4: check_fq_bound_suite,
    5: check_witness_algebra,
    6: check_order_probes,
    7: check_phi2_and_thresholds,
    8: check_hensel,
    9: check_ap_bq,
    10: check_resultant_laws,
    11: check_unit_pipeline,
    12: check_ideal_power,
}


def run_suite(ids=None) -> list[CriterionResult]:
    out = []
    for i in sorted(CHECKS if ids is None else ids):
        t = time.perf_counter()
        r = CHECKS[i]()
        r.seconds = time.perf_counter() - t
        out.append(r)
    return out

