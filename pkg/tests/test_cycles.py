import pytest

from bezout.cycles import Cycle, GaloisCycle
from bezout.numberfield import NumberField, QQ
from bezout.upoly import UPoly

from conftest import upoly


def c1_over(g_coeffs, h_builder):
    g = upoly(*g_coeffs)
    field = NumberField.unchecked(g)
    return GaloisCycle.c1(h_builder(field), g), field


def test_point_cycle_from_linear_pair():
    g = upoly(-4, 1)  # y - 4
    field = NumberField.unchecked(g)
    h = UPoly(field, [field.convert(-3), field.one])  # x - 3
    gc = GaloisCycle.c1(h, g)
    assert gc.size == 1
    assert gc == GaloisCycle.rational_point(3, 4, 1)


def test_origin_is_c1_x_y():
    gc = GaloisCycle.rational_point(0, 0, 1)
    assert gc.text() == "C1(x; y)"
    assert gc.size == 1


def test_monic_normalization_merges_scaled_data():
    g = upoly(-4, 1)
    field = NumberField.unchecked(g)
    h1 = UPoly(field, [field.convert(-6), field.convert(2)])  # 2x - 6
    h2 = UPoly(field, [field.convert(-3), field.one])  # x - 3
    assert GaloisCycle.c1(h1, g) == GaloisCycle.c1(h2, g)


def test_c1_canonicalization_idempotent():
    g = upoly(-2, 0, 1)
    field = NumberField.unchecked(g)
    h = UPoly(field, [-field.gen(), field.zero, field.zero, field.one])
    gc = GaloisCycle.c1(h, g)
    again = GaloisCycle.c1(gc.h, gc.g)
    assert gc == again
    assert gc.text() == again.text()


def test_checked_constructors_reject_reducible_data():
    with pytest.raises(ValueError):
        GaloisCycle.c0(upoly(-1, 0, 1))  # x^2-1 reducible
    g = upoly(-2, 0, 1)
    field = NumberField.unchecked(g)
    h = UPoly(field, [-2, 0, 1])  # x^2-2 = (x-b)(x+b) over the field
    with pytest.raises(ValueError):
        GaloisCycle.c1(h, g)
    with pytest.raises(ValueError):
        GaloisCycle.c1(UPoly(NumberField.unchecked(upoly(-1, 0, 1)), [1, 1]), upoly(-1, 0, 1))


def test_sizes():
    assert GaloisCycle.c0(upoly(1, 1, 1)).size == 2
    g = upoly(-2, 0, 1)
    field = NumberField.unchecked(g)
    h = UPoly(field, [-field.gen(), field.zero, field.zero, field.one])
    assert GaloisCycle.c1(h, g).size == 6
    assert GaloisCycle.point_at_infinity().size == 1


def test_cycle_linear_combination():
    origin = GaloisCycle.rational_point(0, 0, 1)
    inf_y = GaloisCycle.c0(upoly(0, 1))
    inner = Cycle.of(origin, 2) + Cycle.of(inf_y, 1)
    total = inner * 2 + Cycle.of(inf_y, 3)
    assert total == Cycle({origin: 4, inf_y: 5})
    assert total.size == 9


def test_cycle_cancellation():
    c = Cycle.of(GaloisCycle.point_at_infinity(), 3)
    assert (c + c * -1).is_zero


def test_signed_intermediates_cancel_like_the_worked_example():
    pinf = GaloisCycle.point_at_infinity()
    stage = Cycle.of(pinf, -12) + Cycle.of(pinf, 4) + Cycle.of(pinf, 8)
    assert stage.is_zero
    final = stage + Cycle.of(pinf, 2)
    assert final == Cycle.of(pinf, 2)


def test_size_rejects_negative_coefficients():
    c = Cycle.of(GaloisCycle.point_at_infinity(), -1)
    with pytest.raises(ValueError):
        c.size


def test_deterministic_ordering_and_text():
    pinf = GaloisCycle.point_at_infinity()
    c0 = GaloisCycle.c0(upoly(1, 1, 1))
    g = upoly(-1, 1)
    field = NumberField.unchecked(g)
    c1 = GaloisCycle.c1(UPoly(field, [field.convert(2), field.one, field.one]), g)
    cycle = Cycle({c1: 1, pinf: 2, c0: 2})
    assert cycle.text() == "2*(1,0,0) + 2*C0(x^2+x+1) + C1(x^2+x+2; y-1)"


def test_equal_cycles_serialize_identically():
    a = Cycle.of(GaloisCycle.c0(upoly(1, 0, 1)), 2)
    b = Cycle.of(GaloisCycle.c0(upoly(2, 0, 2)), 2)  # same monic data
    assert a == b
    assert a.text() == b.text()


def test_json_entries_structure():
    cycle = Cycle.of(GaloisCycle.c0(upoly(1, 1, 1)), 2)
    entries = cycle.to_json_entries()
    assert entries == [{"type": "C0", "mult": 2, "f": "x^2+x+1", "size": 2}]
