import random

import pytest

from bezout.cycles import Cycle, GaloisCycle
from bezout.intersect import intersection_cycle
from bezout.verify import (
    bezout_holds,
    on_curve,
    property_harness,
    random_coprime_pair,
    resultant_oracle,
)

from conftest import curve, upoly


def test_bezout_on_examples(ex1, ex2):
    a1, b1 = ex1
    assert bezout_holds(intersection_cycle(a1, b1), 3, 3)
    a2, b2 = ex2
    assert bezout_holds(intersection_cycle(a2, b2), 6, 4)
    assert bezout_holds(intersection_cycle(curve("x"), curve("y")), 1, 1)


def test_bezout_rejects_wrong_count(ex1):
    a, b = ex1
    assert not bezout_holds(intersection_cycle(a, b), 3, 2)


def test_membership_examples(ex1):
    a, _ = ex1
    assert on_curve(a, GaloisCycle.rational_point(0, 0, 1))
    assert on_curve(a, GaloisCycle.c0(upoly(0, 1)))
    assert not on_curve(a, GaloisCycle.c0(upoly(-1, 1)))


def test_membership_at_infinity():
    assert on_curve(curve("y^2*z-x^3"), GaloisCycle.point_at_infinity()) is False
    assert on_curve(curve("y*z^2"), GaloisCycle.point_at_infinity()) is True


def test_membership_c1(ex2):
    a, b = ex2
    cycle = intersection_cycle(a, b)
    for gc, _ in cycle.sorted_entries():
        assert on_curve(a, gc)
        assert on_curve(b, gc)


def test_oracle_identity_position(ex1):
    a, b = ex1
    report = resultant_oracle(a, b, seed=3)
    assert report.passed
    assert not report.sheared
    assert ("y", 4) in report.resultant_factors
    assert ("z", 5) in report.resultant_factors
    assert report.resultant_factors == report.cycle_projection


def test_oracle_shears_lines():
    report = resultant_oracle(curve("x"), curve("y"), seed=0)
    assert report.passed
    assert report.sheared  # y has no x-degree, a shear is forced


def test_oracle_on_quartic_pair(ex2):
    report = resultant_oracle(*ex2, seed=11)
    assert report.passed


def test_oracle_random_pairs():
    rng = random.Random("oracle-pairs")
    for trial in range(6):
        a, b = random_coprime_pair(rng, 3)
        report = resultant_oracle(a, b, seed=trial)
        assert report.passed, report.mismatch


def test_oracle_json_shape(ex1):
    doc = resultant_oracle(*ex1, seed=0).to_json()
    assert set(doc) == {
        "verdict",
        "sheared",
        "matrix",
        "resultant_factors",
        "cycle_projection",
        "mismatch",
    }


def test_harness_zero_trials_passes():
    report = property_harness(0, 3, seed=0)
    assert report.all_passed
    assert all(c.trials == 0 for c in report.checks)


def test_harness_small_run():
    report = property_harness(4, 3, seed=123)
    assert report.all_passed, report.text()
    names = [c.name for c in report.checks]
    assert names == [
        "symmetry",
        "additivity",
        "shift_invariance",
        "scalar_invariance",
        "bezout_count",
        "membership",
        "line_pairs",
    ]


def test_harness_is_deterministic():
    a = property_harness(3, 2, seed=9).to_json()
    b = property_harness(3, 2, seed=9).to_json()
    assert a == b
