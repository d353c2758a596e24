from fractions import Fraction

import pytest

from bezout.mpoly import HPoly
from bezout.numberfield import QQ, NumberField
from bezout.parsing import parse_poly
from bezout.upoly import UPoly

EX1_A = "y^2*z-x^3"
EX1_B = "y^2*z-x^2*(x+z)"
EX2_A = (
    "(y-z)*x^5+(y^2-y*z)*x^4+(y^3-y^2*z)*x^3"
    "+(-y^2*z^2+y*z^3)*x^2+(-y^3*z^2+y^2*z^3)*x-y^4*z^2+y^3*z^3"
)
EX2_B = "(y^2-2*z^2)*x^2+(y^3-2*y*z^2)*x+y^4-y^2*z^2-2*z^4"


def curve(text: str) -> HPoly:
    return HPoly(parse_poly(text))


def upoly(*coeffs) -> UPoly:
    """Rational univariate polynomial from low-to-high coefficients."""
    return UPoly(QQ, [Fraction(c) for c in coeffs])


@pytest.fixture
def ex1():
    return curve(EX1_A), curve(EX1_B)


@pytest.fixture
def ex2():
    return curve(EX2_A), curve(EX2_B)


@pytest.fixture
def sqrt2_field():
    return NumberField(upoly(-2, 0, 1))
