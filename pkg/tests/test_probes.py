import json
from itertools import product

import pytest

from pseudofield.errors import BadModulus, EnumerationTooLarge
from pseudofield.field import GF
from pseudofield.probes import (
    ThresholdReport,
    guarded_transitivity_check,
    low_set,
    max_threshold,
    order_axioms,
    phi2_check,
    phi2_counterexample,
    phi_d_check,
    phi_d_counterexample,
    psi_check,
    transitivity_counterexample,
)
from pseudofield.search import level_map

PRIMES_3MOD4 = [p for p in range(3, 200) if p % 4 == 3 and all(p % d for d in range(2, int(p**0.5) + 1))]


def brute_phi_d(p, S, d):
    for coeffs in sorted(product(S, repeat=d)):
        if not any((pow(x, d, p) + sum(c * pow(x, i, p) for i, c in enumerate(coeffs))) % p == 0 for x in range(p)):
            return coeffs
    return None


def test_phi2_example():
    assert not phi2_check(GF(3), 2, 2)
    assert phi2_counterexample(GF(3), 2, 2) == (1, 1)
    assert phi2_check(GF(101), 1, 1)


def test_phi2_matches_brute_force():
    F = GF(199)
    S = [int(s) for s in low_set(F, 3, 3)]
    squares = {x * x % 199 for x in range(199)}
    expected = next(((x, y) for x in S for y in S if (x * x + y * y) % 199 not in squares), None)
    assert phi2_counterexample(F, 3, 3) == expected


@pytest.mark.parametrize("p, B, d, cx", [(7, 2, 3, False), (11, 2, 3, False), (13, 2, 2, True), (7, 2, 2, True), (13, 3, 3, False)])
def test_phi_d_matches_brute_force(p, B, d, cx):
    F = GF(p)
    budget = max(B, 2)
    S = [int(s) for s in low_set(F, B, budget)]
    assert phi_d_counterexample(F, B, d, budget, cx) == brute_phi_d(p, S, d)


def test_phi_d_trivial_and_guards():
    assert phi_d_check(GF(7), 1, 3, 1)
    with pytest.raises(ValueError):
        phi_d_check(GF(7), 1, 2, 1)
    with pytest.raises(EnumerationTooLarge):
        phi_d_counterexample(GF(199), 4, 3, 4, ceiling=1000)


def test_low_set_respects_budget():
    with pytest.raises(ValueError):
        low_set(GF(7), 4, 2)
    lm = level_map(GF(31), 3)
    assert list(low_set(GF(31), 3, 3)) == [x for x in range(31) if 0 < lm[x] < 3]


def test_max_threshold_examples():
    rep = max_threshold(GF(3), 2, 2)
    assert rep.max_satisfying == 1 and rep.witnesses_of_failure == [[1, 1]]
    assert max_threshold(GF(7), 2, 0).max_satisfying == 0
    rep = max_threshold(GF(199), 2, 3)
    assert json.loads(rep.to_json())["p"] == 199
    assert rep.to_csv().splitlines()[0].startswith("p,d,budget,B")


def test_threshold_report_rejects_non_closed_rows():
    rows = [{"B": 0, "holds": False, "implied": False, "counterexample": [0]},
            {"B": 1, "holds": True, "implied": False, "counterexample": None}]
    with pytest.raises(AssertionError):
        ThresholdReport(7, 2, 1, False, 1, [], rows)


def test_reports_downward_closed_for_small_primes():
    for p in PRIMES_3MOD4[:10]:
        for d in (2, 3):
            rep = max_threshold(GF(p), d, 3)
            verdicts = [r["holds"] for r in rep.rows]
            assert verdicts == sorted(verdicts, reverse=True)


def test_psi():
    assert psi_check(GF(199), 1, 1)
    assert not psi_check(GF(199), 0, 1)
    assert psi_check(GF(199), 3, 3)


def test_order_axioms_for_3_mod_4():
    for p in PRIMES_3MOD4:
        r = order_axioms(GF(p))
        assert r["total"] and r["antisymmetric"]
    r = order_axioms(GF(13))
    assert not r["antisymmetric"] and r["antisymmetry_counterexample"] == (0, 1)


def test_unguarded_transitivity_fails():
    a, b, c = transitivity_counterexample(GF(7))
    sq = {x * x % 7 for x in range(7)}
    assert (b - a) % 7 in sq and (c - b) % 7 in sq and (c - a) % 7 not in sq


def test_guarded_transitivity():
    res = guarded_transitivity_check(GF(7), 1, 1)
    assert res and not res.skipped
    for p in PRIMES_3MOD4[:8]:
        for B in range(4):
            r = guarded_transitivity_check(GF(p), B, 3)
            assert r.holds
            if not r.skipped:
                assert phi2_check(GF(p), B, 3)
    skipped = guarded_transitivity_check(GF(3), 2, 2)
    assert skipped.skipped and "guard" in skipped.diagnostic
    with pytest.raises(BadModulus):
        guarded_transitivity_check(GF(13), 1, 1)
