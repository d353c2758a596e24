import random
from fractions import Fraction

import pytest

from bezout.mpoly import (
    BiRat,
    HPoly,
    MPoly,
    X,
    Y,
    Z,
    clear_denominators,
    dehomogenize,
    ff_divide,
    gcd_homogeneous,
    gcd_yz,
    homogenize,
    resultant_x,
    substitute_line,
    x_content,
)
from bezout.numberfield import NumberField, QQ
from bezout.parsing import parse_poly
from bezout.resultants import MPOLY_RING, sylvester_resultant

from conftest import EX2_A, curve, upoly


def rand_homog(rng, degree, bound=4):
    while True:
        terms = {}
        for i in range(degree + 1):
            for j in range(degree + 1 - i):
                c = rng.randint(-bound, bound)
                if c:
                    terms[(i, j, degree - i - j)] = Fraction(c)
        if terms:
            return HPoly(MPoly(terms))


# -- homogenize -------------------------------------------------------


def test_homogenize_cubic():
    assert homogenize(parse_poly("y^2-x^3")) == curve("y^2*z-x^3")


def test_homogenize_line():
    assert homogenize(parse_poly("x+y+1")) == curve("x+y+z")


def test_homogenize_constant():
    h = homogenize(parse_poly("5"))
    assert h.degree == 0


def test_homogenize_rejects_zero_and_z():
    with pytest.raises(ValueError):
        homogenize(MPoly.zero())
    with pytest.raises(ValueError):
        homogenize(parse_poly("x+z"))


def test_hpoly_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        HPoly(parse_poly("x+1"))


def test_dehomogenize_inverts_homogenize():
    p = parse_poly("y^2-x^3+2*x*y")
    assert dehomogenize(homogenize(p), Z) == p


# -- fraction-field division and clearing ------------------------------


def test_ff_divide_example_pair(ex2):
    a, b = ex2
    q, r = ff_divide(a, b)
    h, qq, rr = clear_denominators(q, r)
    assert h.poly == parse_poly("y^2-2*z^2")
    assert rr.poly == parse_poly("(y^2-2*z^2)*z^2*(y-z)*(z^2*x-y^3)")
    assert h.poly * a.poly == qq.poly * b.poly + rr.poly
    # the quotient itself matches (y-z)*x*(x^2-z^2) after clearing
    assert qq.poly == parse_poly("(y-z)*x*(x^2-z^2)")


def test_ff_divide_cubic_pair(ex1):
    a, b = ex1
    q, r = ff_divide(a, b)
    h, qq, rr = clear_denominators(q, r)
    assert h.poly == MPoly.constant(1)
    assert qq.poly == MPoly.constant(1)
    assert rr.poly == parse_poly("x^2*z")


def test_ff_divide_equal_inputs(ex1):
    a, _ = ex1
    q, r = ff_divide(a, a)
    assert r == []
    assert q[0] == BiRat.from_mpoly(MPoly.constant(1))
    with pytest.raises(ValueError):
        clear_denominators(q, r)


def test_ff_divide_preconditions(ex1):
    a, _ = ex1
    with pytest.raises(ValueError):
        ff_divide(a, curve("y*z"))


def test_cleared_identity_on_random_pairs():
    rng = random.Random("clear-denominators")
    checked = 0
    while checked < 200:
        da = rng.randint(1, 4)
        db = rng.randint(1, da)
        a = rand_homog(rng, da)
        b = rand_homog(rng, db)
        if a.x_degree < 1 or b.x_degree < 1 or a.x_degree < b.x_degree:
            continue
        q, r = ff_divide(a, b)
        if not r:
            continue
        h, qq, rr = clear_denominators(q, r)
        assert h.poly * a.poly == qq.poly * b.poly + rr.poly
        assert rr.x_degree < b.x_degree
        checked += 1


# -- gcds ---------------------------------------------------------------


def test_gcd_example_pair(ex2):
    a, b = ex2
    q, r = ff_divide(a, b)
    _, _, rr = clear_denominators(q, r)
    assert gcd_homogeneous(b, rr).poly == parse_poly("y^2-2*z^2")


def test_gcd_self(ex1):
    a, _ = ex1
    g = gcd_homogeneous(a, a)
    assert g.poly == parse_poly("x^3-y^2*z")  # leading-1 normalization


def test_gcd_coprime_monomials():
    assert gcd_homogeneous(curve("x*y"), curve("z^2")).degree == 0


def test_gcd_divides_both_and_leaves_coprime_parts():
    rng = random.Random("gcd-props")
    for _ in range(40):
        g = rand_homog(rng, rng.randint(0, 2))
        a = rand_homog(rng, rng.randint(1, 2)) * g
        b = rand_homog(rng, rng.randint(1, 2)) * g
        d = gcd_homogeneous(a, b)
        qa = a.exact_div(d)
        qb = b.exact_div(d)
        assert qa.poly * d.poly == a.poly
        assert gcd_homogeneous(qa, qb).degree == 0
        d.poly.exact_div(g.normalized().poly)  # raises unless g | gcd


def test_gcd_yz_strips_monomials():
    p = parse_poly("y^3*z^2-y^2*z^3")
    q = parse_poly("y^2*z^4+y^3*z^3")
    # common: y^2 z^2 (y - z)? q = y^2 z^3 (z + y): shared part is y^2 z^2
    assert gcd_yz(p, q) == parse_poly("y^2*z^2")


# -- x-content ------------------------------------------------------------


def test_x_content_example():
    r = curve("z^2*(y-z)*(z^2*x-y^3)")
    content, primitive = x_content(r)
    assert content.poly == parse_poly("y*z^2-z^3")
    assert primitive.poly == parse_poly("z^2*x-y^3")
    assert content.poly * primitive.poly == r.poly


def test_x_content_monomial():
    content, primitive = x_content(curve("x^2*z"))
    assert content.poly == parse_poly("z")
    assert primitive.poly == parse_poly("x^2")


def test_x_content_trivial():
    content, primitive = x_content(curve("x+y"))
    assert content.degree == 0
    assert primitive.poly == parse_poly("x+y")


def test_x_content_roundtrip_random():
    rng = random.Random("content")
    for _ in range(40):
        a = rand_homog(rng, rng.randint(1, 4))
        content, primitive = x_content(a)
        assert content.poly * primitive.poly == a.poly
        assert x_content(primitive)[0].degree == 0


# -- substitution -----------------------------------------------------------


def test_substitute_line_on_pencil(sqrt2_field):
    from bezout.upoly import UPoly

    a = curve(EX2_A)
    b = sqrt2_field.gen()
    e0, f = substitute_line(a, b, sqrt2_field)
    assert e0 == 1
    # f = unit * (x^3 - b)(x^2 + b*x + 2), re-expanded
    product = UPoly(sqrt2_field, [-b, 0, 0, 1]) * UPoly(
        sqrt2_field, [sqrt2_field.convert(2), b, sqrt2_field.one]
    )
    assert f.monic() == product.monic()


def test_substitute_line_at_zero():
    field = NumberField.unchecked(upoly(0, 1))  # Q[t]/(t): beta = 0
    e0, f = substitute_line(curve("y^2*z-x^3"), field.gen(), field)
    assert e0 == 0
    assert f.degree == 3
    assert [c.as_fraction() for c in f.coeffs] == [0, 0, 0, -1]


def test_substitute_line_rational_line():
    field = NumberField.unchecked(upoly(-1, 1))  # beta = 1
    e0, f = substitute_line(curve("x+y"), field.gen(), field)
    assert e0 == 0
    assert [c.as_fraction() for c in f.coeffs] == [1, 1]


def test_substitute_line_detects_shared_line(sqrt2_field):
    a = curve("y^2-2*z^2")  # vanishes identically on y = sqrt2 z
    with pytest.raises(ValueError):
        substitute_line(a, sqrt2_field.gen(), sqrt2_field)


# -- resultants -------------------------------------------------------------


def test_resultant_lines():
    assert resultant_x(curve("x-z"), curve("x+z")).poly == parse_poly("2*z")
    assert resultant_x(curve("x"), curve("x+y")).poly == parse_poly("y")


def test_resultant_cubic_pair(ex1):
    a, b = ex1
    r = resultant_x(a, b)
    terms = r.poly.terms
    assert list(terms.keys()) == [(0, 4, 5)]
    assert terms[(0, 4, 5)] != 0


def test_resultant_zero_iff_common_x_factor():
    shared = curve("x-y")
    a = shared * curve("x+z")
    b = shared * curve("y+z")
    assert resultant_x(a, b) is None
    assert resultant_x(curve("x+z"), curve("x-y")) is not None


def test_resultant_matches_sylvester_determinant():
    rng = random.Random("res-cross")
    for _ in range(25):
        a = rand_homog(rng, rng.randint(1, 3))
        b = rand_homog(rng, rng.randint(1, 3))
        if a.x_degree < 1 or b.x_degree < 1:
            continue
        via_prs = resultant_x(a, b)
        via_det = sylvester_resultant(
            a.poly.x_coefficients(), b.poly.x_coefficients(), MPOLY_RING
        )
        if via_prs is None:
            assert via_det.is_zero
        else:
            assert via_prs.poly == via_det


def test_resultant_homogeneity_asserted():
    # construction through HPoly guarantees the result is homogeneous
    r = resultant_x(curve("x^2+y*z"), curve("x^3+z^3"))
    assert r.poly.is_homogeneous
