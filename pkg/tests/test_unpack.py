import mpmath
import pytest

from bezout.cycles import Cycle, GaloisCycle
from bezout.intersect import intersection_cycle
from bezout.numberfield import NumberField
from bezout.unpack import ApproxPoint, complex_roots, unpack
from bezout.upoly import UPoly

from conftest import curve, upoly


def close(a, b, tol=1e-25):
    return abs(mpmath.mpc(a) - mpmath.mpc(b)) < tol


def test_roots_of_x2_plus_1():
    roots = complex_roots(upoly(1, 0, 1))
    assert len(roots) == 2
    assert any(close(r, 1j) for r in roots)
    assert any(close(r, -1j) for r in roots)


def test_roots_of_cyclotomic():
    roots = complex_roots(upoly(1, 1, 1))
    omega = (-1 + mpmath.sqrt(-3)) / 2
    assert any(close(r, omega) for r in roots)
    assert any(close(r, mpmath.conj(omega)) for r in roots)


def test_roots_of_y2_minus_2():
    roots = complex_roots(upoly(-2, 0, 1))
    s = mpmath.sqrt(2)
    assert any(close(r, s) for r in roots)
    assert any(close(r, -s) for r in roots)


def test_roots_with_multiplicity():
    f = upoly(-1, 1) ** 3 * upoly(2, 1)
    roots = complex_roots(f)
    assert len(roots) == 4
    assert sum(1 for r in roots if close(r, 1, 1e-20)) == 3


def test_residual_bound_on_roots():
    f = upoly(3, -7, 2, 0, 5)
    roots = complex_roots(f, precision=30)
    with mpmath.workdps(45):
        for r in roots:
            val = f.evaluate(mpmath.mpc(r))
            assert abs(val) < mpmath.mpf(10) ** -15


def test_unpack_single_rational_point():
    pts = unpack(Cycle.of(GaloisCycle.c0(upoly(-2, 1)), 1))
    assert len(pts) == 1
    p = pts[0]
    assert close(p.x, 2) and close(p.y, 1) and p.z == 0


def test_unpack_point_at_infinity():
    pts = unpack(Cycle.of(GaloisCycle.point_at_infinity(), 3))
    assert len(pts) == 1
    assert pts[0].mult == 3
    assert (complex(pts[0].x), complex(pts[0].y), pts[0].z) == (1 + 0j, 0j, 0)


def test_unpack_double_sum_cycle():
    g = upoly(-2, 0, 1)
    field = NumberField.unchecked(g)
    b = field.gen()
    h = UPoly(field, [-b, field.zero, field.zero, field.one])
    pts = unpack(Cycle.of(GaloisCycle.c1(h, g), 1), precision=30)
    assert len(pts) == 6
    gamma = mpmath.mpf(2) ** (mpmath.mpf(1) / 6)
    omega = mpmath.exp(2j * mpmath.pi / 3)
    expected = []
    for sign in (1, -1):
        for k in range(3):
            expected.append((sign * omega**k * gamma, sign * gamma**3))
    for ex, ey in expected:
        assert any(
            abs(p.x - ex) < 1e-10 and abs(p.y - ey) < 1e-10 for p in pts
        ), (ex, ey)


def test_unpack_counts_match_cycle_size(ex2):
    a, b = ex2
    cycle = intersection_cycle(a, b)
    pts = unpack(cycle, precision=30, curves=(a, b))
    assert sum(p.mult for p in pts) == cycle.size == 24


def test_unpack_residuals(ex1):
    a, b = ex1
    cycle = intersection_cycle(a, b)
    for p in unpack(cycle, precision=30, curves=(a, b)):
        assert p.residual_a < 1e-15
        assert p.residual_b < 1e-15


def test_unpack_conjugate_closure(ex2):
    a, b = ex2
    pts = unpack(intersection_cycle(a, b), precision=30)
    coords = [(p.x, p.y, p.z) for p in pts]
    with mpmath.workdps(45):
        for x, y, z in coords:
            conj = (mpmath.conj(x), mpmath.conj(y), z)
            assert any(
                abs(cx - conj[0]) < 1e-20 and abs(cy - conj[1]) < 1e-20 and cz == z
                for cx, cy, cz in coords
            )


def test_unpack_rejects_negative_cycles():
    with pytest.raises(ValueError):
        unpack(Cycle.of(GaloisCycle.point_at_infinity(), -1))


def test_unpack_is_deterministic(ex2):
    a, b = ex2
    cycle = intersection_cycle(a, b)
    p1 = [(str(p.x), str(p.y), p.z, p.mult) for p in unpack(cycle)]
    p2 = [(str(p.x), str(p.y), p.z, p.mult) for p in unpack(cycle)]
    assert p1 == p2
