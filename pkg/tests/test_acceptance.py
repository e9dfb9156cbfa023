"""One line per acceptance criterion, at the stated tolerances."""

import time

import pytest

from pseudofield import acceptance
from pseudofield.cli import main


def _check(i):
    r = acceptance.CHECKS[i]()
    print(r.line())
    assert r.passed, r.line()


def test_c01_fq_example_exact_and_under_1ms():
    _check(1)


def test_c02_fqbar_example_with_exhaustive_lower_bound_under_5s():
    _check(2)


def test_c03_fast_equals_oracle_all_primes_to_997_under_60s():
    _check(3)


def test_c04_fq_inequalities_exhaustive_to_199():
    _check(4)


def test_c05_witness_algebra_500_per_construction():
    _check(5)


def test_c06_order_probes_and_guarded_transitivity():
    _check(6)


def test_c07_phi2_counterexample_and_threshold_closure():
    _check(7)


def test_c08_hensel_suite_200_instances():
    _check(8)


def test_c09_ap_bq_suite_100_pairs():
    _check(9)


def test_c10_resultant_laws_200_instances():
    _check(10)


def test_c11_unit_value_pipeline():
    _check(11)


def test_c12_ideal_power_generator_sqrt_minus_5():
    _check(12)


@pytest.mark.slow
def test_c13_selftest_deterministic_under_5_minutes(capsys):
    outputs = []
    for _ in range(2):
        t = time.perf_counter()
        assert main(["selftest"]) == 0
        elapsed = time.perf_counter() - t
        assert elapsed < 300
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
