"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines; every tolerance and runtime bound is pinned here.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from bezout.cycles import Cycle, GaloisCycle
from bezout.factor import factor_nf, factor_q, is_irreducible_q
from bezout.intersect import intersection_cycle, line_point, point_cycle
from bezout.mpoly import resultant_x
from bezout.numberfield import NumberField, QQ
from bezout.unpack import unpack
from bezout.upoly import UPoly
from bezout.verify import (
    on_curve,
    property_harness,
    random_coprime_pair,
    random_line,
    resultant_oracle,
)

from conftest import EX1_A, EX1_B, EX2_A, EX2_B, curve, upoly


def report(criterion: int, message: str):
    print(f"[criterion {criterion:2d}] PASS: {message}")


def expected_example1_cycle() -> Cycle:
    return Cycle(
        {
            GaloisCycle.rational_point(0, 0, 1): 4,
            GaloisCycle.c0(upoly(0, 1)): 5,
        }
    )


def expected_example2_cycle() -> Cycle:
    g2 = upoly(-2, 0, 1)
    f2 = NumberField.unchecked(g2)
    b2 = f2.gen()
    g_i = upoly(1, 0, 1)
    f_i = NumberField.unchecked(g_i)
    g4 = upoly(1, 0, 0, 0, 1)
    f4 = NumberField.unchecked(g4)
    g1 = upoly(-1, 1)
    f1 = NumberField.unchecked(g1)
    return Cycle(
        {
            GaloisCycle.point_at_infinity(): 2,
            GaloisCycle.c0(upoly(1, 1, 1)): 2,
            GaloisCycle.c1(UPoly(f1, [f1.convert(2), f1.one, f1.one]), g1): 1,
            GaloisCycle.c1(UPoly(f_i, [f_i.gen(), f_i.one]), g_i): 1,
            GaloisCycle.c1(UPoly(f4, [-f4.gen() ** 3, f4.one]), g4): 1,
            GaloisCycle.c1(UPoly(f2, [-b2, f2.zero, f2.zero, f2.one]), g2): 1,
            GaloisCycle.c1(UPoly(f2, [f2.convert(2), b2, f2.one]), g2): 1,
        }
    )


def test_criterion_1_example_1_exact():
    a, b = curve(EX1_A), curve(EX1_B)
    start = time.monotonic()
    cycle = intersection_cycle(a, b)
    elapsed = time.monotonic() - start
    assert cycle == expected_example1_cycle()  # exact, zero tolerance
    assert cycle.size == 9 == 3 * 3
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    report(1, f"cubic pair gives 4*C1(x;y) + 5*C0(x), size 9, in {elapsed:.3f}s")


def test_criterion_2_example_2_exact():
    a, b = curve(EX2_A), curve(EX2_B)
    start = time.monotonic()
    cycle = intersection_cycle(a, b)
    elapsed = time.monotonic() - start
    assert cycle == expected_example2_cycle()  # exact match
    assert cycle.size == 24 == 6 * 4
    assert elapsed < 10.0, f"took {elapsed:.3f}s"
    report(2, f"sextic/quartic pair gives the seven-term sum, size 24, in {elapsed:.3f}s")


def test_criterion_3_bezout_on_random_pairs():
    rng = random.Random(20260810)
    start = time.monotonic()
    for trial in range(50):
        a, b = random_coprime_pair(rng, 4)
        cycle = intersection_cycle(a, b)  # positivity + count asserted inside
        assert cycle.all_positive
        assert cycle.size == a.degree * b.degree
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"took {elapsed:.1f}s"
    report(3, f"50 seeded coprime pairs (deg <= 4) all meet the count, in {elapsed:.2f}s")


def test_criterion_4_cycle_identity_harness():
    harness = property_harness(trials=25, max_degree=3, seed=424242)
    wanted = {"symmetry", "additivity", "shift_invariance", "scalar_invariance"}
    for check in harness.checks:
        if check.name in wanted:
            assert check.trials == 25
            assert check.ok, f"{check.name}: {check.counterexample}"
    report(4, "symmetry/additivity/shift/scalar each exact on 25 seeded instances")


def test_criterion_5_membership_everywhere():
    checked = 0
    pairs = [
        (curve(EX1_A), curve(EX1_B)),
        (curve(EX2_A), curve(EX2_B)),
    ]
    rng = random.Random(5555)
    for _ in range(10):
        pairs.append(random_coprime_pair(rng, 3))
    for a, b in pairs:
        for gc, _ in intersection_cycle(a, b).sorted_entries():
            assert on_curve(a, gc), f"{gc.text()} not on {a}"
            assert on_curve(b, gc), f"{gc.text()} not on {b}"
            checked += 1
    report(5, f"all {checked} Galois cycles of 12 accepted outputs lie on both curves")


def test_criterion_6_resultant_oracle():
    a, b = curve(EX1_A), curve(EX1_B)
    res = resultant_x(a, b)
    assert list(res.poly.terms.keys()) == [(0, 4, 5)]  # c * y^4 z^5
    rep = resultant_oracle(a, b, seed=0)
    assert rep.passed
    assert ("y", 4) in rep.resultant_factors and ("z", 5) in rep.resultant_factors
    rng = random.Random(606060)
    for trial in range(20):
        pa, pb = random_coprime_pair(rng, 3)
        rep = resultant_oracle(pa, pb, seed=trial)
        assert rep.passed, f"{pa} / {pb}: {rep.mismatch}"
    report(6, "projection oracle agrees on the cubic fixture and 20 seeded pairs")


def test_criterion_7_factorization_roundtrip():
    rng = random.Random(777)
    for _ in range(120):
        deg = rng.randint(1, 8)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(deg)]
        coeffs.append(Fraction(rng.randint(1, 9)))
        f = UPoly(QQ, coeffs)
        fac = factor_q(f)
        assert fac.expand() == f  # exact round trip
    moduli = []
    while len(moduli) < 5:
        dg = rng.randint(1, 4)
        g = UPoly(QQ, [Fraction(rng.randint(-6, 6)) for _ in range(dg)] + [Fraction(1)])
        if g.degree >= 1 and is_irreducible_q(g):
            moduli.append(g)
    for trial in range(80):
        field = NumberField.unchecked(moduli[trial % len(moduli)])
        deg = rng.randint(1, 6)
        coeffs = [
            field.element([rng.randint(-4, 4) for _ in range(field.degree)])
            for _ in range(deg)
        ]
        lead = field.one
        f = UPoly(field, coeffs + [lead])
        fac = factor_nf(f)
        assert fac.expand() == f
    # the x^4 + 1 split over Q(sqrt 2)
    field = NumberField(upoly(-2, 0, 1))
    b = field.gen()
    fac = factor_nf(UPoly(field, [1, 0, 0, 0, 1]))
    assert {g for g, _ in fac.factors} == {
        UPoly(field, [1, b, 1]),
        UPoly(field, [1, -b, 1]),
    }
    report(7, "200 seeded factorizations re-expand exactly; x^4+1 splits over Q(sqrt2)")


def test_criterion_8_numeric_unpacking():
    g = upoly(-2, 0, 1)
    field = NumberField.unchecked(g)
    b = field.gen()
    h = UPoly(field, [-b, field.zero, field.zero, field.one])
    cycle = Cycle.of(GaloisCycle.c1(h, g), 1)
    pts = unpack(cycle, precision=30)
    assert len(pts) == 6
    with mpmath.workdps(45):
        gamma = mpmath.mpf(2) ** (mpmath.mpf(1) / 6)
        omega = mpmath.exp(2j * mpmath.pi / 3)
        expected = [
            (sign * omega**k * gamma, sign * gamma**3)
            for sign in (1, -1)
            for k in range(3)
        ]
        for ex, ey in expected:
            assert any(
                abs(p.x - ex) < 1e-10 and abs(p.y - ey) < 1e-10 for p in pts
            ), (ex, ey)
    a2, b2 = curve(EX2_A), curve(EX2_B)
    full = unpack(intersection_cycle(a2, b2), precision=30, curves=(a2, b2))
    for p in full:
        assert p.residual_a is not None and p.residual_a < 1e-8
        assert p.residual_b is not None and p.residual_b < 1e-8
    report(8, "C1(x^3-y; y^2-2) unpacks to the six expected points (1e-10); residuals < 1e-8")


def test_criterion_9_line_formula():
    rng = random.Random(999)
    done = 0
    while done < 100:
        l1, l2 = random_line(rng), random_line(rng)
        from bezout.intersect import CommonComponentError, Line

        try:
            p = line_point(l1, l2)
        except CommonComponentError:
            continue
        assert l1.evaluate(p) == 0  # exact vanishing on both lines
        assert l2.evaluate(p) == 0
        from bezout.mpoly import HPoly, MPoly

        h1 = HPoly(MPoly({(1, 0, 0): l1.a1, (0, 1, 0): l1.a2, (0, 0, 1): l1.a3}))
        h2 = HPoly(MPoly({(1, 0, 0): l2.a1, (0, 1, 0): l2.a2, (0, 0, 1): l2.a3}))
        cycle = intersection_cycle(h1, h2)
        assert cycle == Cycle.of(point_cycle(p), 1)
        done += 1
    report(9, "100 seeded line pairs: exact vanishing and a single multiplicity-1 point")


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "bezout.cli", *args], capture_output=True, text=True
    )


def test_criterion_10_cli_golden(tmp_path):
    text1 = [_run_cli("intersect", EX1_A, EX1_B).stdout for _ in range(2)]
    assert text1[0] == text1[1]
    assert text1[0] == "5*C0(x) + 4*C1(x; y)\n# Bezout: 9 = 3*3 OK\n"
    text2 = [_run_cli("intersect", EX2_A, EX2_B).stdout for _ in range(2)]
    assert text2[0] == text2[1]
    json1 = [_run_cli("intersect", EX1_A, EX1_B, "--json", "--points").stdout for _ in range(2)]
    assert json1[0] == json1[1]
    json2 = [_run_cli("intersect", EX2_A, EX2_B, "--json", "--points").stdout for _ in range(2)]
    assert json2[0] == json2[1]
    doc = json.loads(json2[0])
    assert sum(c["mult"] * c["size"] for c in doc["cycles"]) == doc["bezout"] == 24

    fig1 = tmp_path / "fig1.svg"
    out = _run_cli(
        "plot", EX1_A, EX1_B, "--slice", "z=1", "--grid", "96", "--out", str(fig1)
    )
    assert out.returncode == 0, out.stderr
    assert ">4<" in fig1.read_text()
    fig2 = tmp_path / "fig2.svg"
    out = _run_cli(
        "plot", EX1_A, EX1_B, "--slice", "y=1", "--grid", "96", "--out", str(fig2)
    )
    assert out.returncode == 0, out.stderr
    assert ">5<" in fig2.read_text()
    report(10, "CLI text/JSON byte-stable; slice figures carry markers 4 and 5")
