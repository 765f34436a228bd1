"""Acceptance gate: twelve named criteria, one pass/fail line each.

Each criterion delegates to the matching named check at its full
documented bound, then enforces the documented time budget where one
exists.  Sub-millisecond budgets are measured on a warm cache (best of
three runs after a warmup call); wall budgets for the heavy sweeps are
measured cold within the test session.
"""

import time

from kostantpv import checks


def _report(number, ok, detail):
    print(f'criterion {number}: {"PASS" if ok else "FAIL"} ({detail})')
    assert ok, f'criterion {number}: {detail}'


def _warm_best_of_three(fn, bound):
    fn(bound)
    best = min(_timed(fn, bound) for _ in range(3))
    return best


def _timed(fn, bound):
    t0 = time.perf_counter()
    fn(bound)
    return time.perf_counter() - t0


def test_criterion_01_seed_sets():
    ok, detail = checks.check_x_sets(4)
    elapsed = _warm_best_of_three(checks.check_x_sets, 4)
    _report(1, ok and elapsed < 0.001, f'{detail}; {elapsed * 1e6:.0f}us warm')


def test_criterion_02_factorization_bijection():
    t0 = time.perf_counter()
    ok, detail = checks.check_factorization(6)
    elapsed = time.perf_counter() - t0
    _report(2, ok and elapsed < 1.0, f'{detail}; {elapsed:.2f}s')


def test_criterion_03_case_chains():
    t0 = time.perf_counter()
    ok, detail = checks.check_case_chains(6)
    elapsed = time.perf_counter() - t0
    _report(3, ok and elapsed < 30.0, f'{detail}; {elapsed:.2f}s')


def test_criterion_04_positivity_ratio():
    ok, detail = checks.check_ratio(7)
    _report(4, ok, detail)


def test_criterion_05_worked_tables():
    ok, detail = checks.check_worked_tables(4)
    elapsed = _warm_best_of_three(checks.check_worked_tables, 4)
    _report(5, ok and elapsed < 0.001, f'{detail}; {elapsed * 1e6:.0f}us warm')


def test_criterion_06_cross_oracle():
    t0 = time.perf_counter()
    ok, detail = checks.check_cross_oracle(6)
    elapsed = time.perf_counter() - t0
    _report(6, ok and elapsed < 300.0, f'{detail}; {elapsed:.2f}s')


def test_criterion_07_thin_iff_Y():
    ok, detail = checks.check_thinness(7)
    _report(7, ok, detail)


def test_criterion_08_branch_consistency():
    ok, detail = checks.check_branch_consistency(7)
    _report(8, ok, detail)


def test_criterion_09_linear_quiver():
    ok, detail = checks.check_linear_quiver(7)
    _report(9, ok, detail)


def test_criterion_10_socle_shadow():
    ok, detail = checks.check_socle_shadow(6)
    _report(10, ok, detail)


def test_criterion_11_kl_infrastructure():
    t0 = time.perf_counter()
    ok, detail = checks.check_kl_properties(5)
    elapsed = time.perf_counter() - t0
    _report(11, ok and elapsed < 120.0, f'{detail}; {elapsed:.2f}s')


def test_criterion_12_reconciliation():
    ok, detail = checks.check_reconciliation(6)
    _report(12, ok, detail)
