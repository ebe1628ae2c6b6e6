"""Extended sweeps past the default ranges (deselected by default; run with
`pytest -m slow`)."""

import pytest

import oracles
from sl2q.checks import check_min_class_bounds, run_checks
from sl2q.cli import prime_powers_up_to

pytestmark = pytest.mark.slow


def test_full_suite_to_49():
    # the one expected failure is the q=5 square/non-square value-set claim
    failures = []
    for q in prime_powers_up_to(49):
        for r in run_checks(oracles.field_for(q)):
            if not r.passed:
                failures.append((q, r.check))
    assert failures == [(5, "value_set_counts")]


def test_minimum_bounds_to_64():
    for q in prime_powers_up_to(64):
        r = check_min_class_bounds(oracles.field_for(q))
        assert r.passed, (q, r.counterexample)
        expected = q - 1 if q % 2 == 0 else (2 if q == 3 else (q + 3) // 2)
        assert r.details["min_classes"] == expected
