"""The intersection-cycle algorithm for projective plane curves over Q.

One reduction step divides, in x, the curve of larger x-degree by the other
over the fraction field of Q[y,z], clears denominators to an exact identity
multiplier*A = quotient*divisor + remainder, and removes the shared x-free
gcd from divisor and remainder.  The cycle identity

    A . B  =  remainder . divisor - multiplier . divisor + A . shared

then rewrites the problem in terms of strictly smaller x-degrees, until one
side is a product of lines (x-free), where everything is explicit: factor
over Q, pass to the field generated by a root, factor there, and read off
the canonical cycles.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .cycles import Cycle, GaloisCycle
from .factor import factor_binary_form, factor_nf
from .mpoly import (
    HPoly,
    MPoly,
    X,
    Y,
    Z,
    clear_denominators,
    ff_divide,
    gcd_homogeneous,
    substitute_line,
    x_content,
)
from .numberfield import NumberField
from .upoly import UPoly


class CommonComponentError(Exception):
    """The two curves share a nonconstant factor; the cycle is undefined."""

    def __init__(self, gcd: HPoly | None, detail: str | None = None):
        super().__init__(f"common component: {detail if gcd is None else gcd}")
        self.gcd = gcd


class CycleInvariantError(RuntimeError):
    """An internal contract failed (count mismatch or negative coefficient)."""


# ---------------------------------------------------------------------
# lines and rational points
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class Line:
    """a1*x + a2*y + a3*z with exact coefficients, not all zero."""

    a1: object
    a2: object
    a3: object

    def __post_init__(self):
        if not (self.a1 or self.a2 or self.a3):
            raise ValueError("a line needs a nonzero coefficient")

    def coeffs(self):
        return (self.a1, self.a2, self.a3)

    def evaluate(self, p: "RatPoint"):
        return self.a1 * p.x + self.a2 * p.y + self.a3 * p.z


@dataclass(frozen=True)
class RatPoint:
    """Projective point scaled so its last nonzero coordinate is 1."""

    x: object
    y: object
    z: object

    @staticmethod
    def normalized(x, y, z) -> "RatPoint":
        if z:
            return RatPoint(x / z, y / z, z / z)
        if y:
            return RatPoint(x / y, y / y, y - y)
        if x:
            return RatPoint(x / x, x - x, x - x)
        raise ValueError("(0,0,0) is not a projective point")


def line_point(l1: Line, l2: Line) -> RatPoint:
    """The unique intersection point of two distinct lines (cross product)."""
    a1, a2, a3 = l1.coeffs()
    b1, b2, b3 = l2.coeffs()
    x = a2 * b3 - a3 * b2
    y = a3 * b1 - a1 * b3
    z = a1 * b2 - a2 * b1
    if not (x or y or z):
        gcd = None
        if all(isinstance(c, (int, Fraction)) for c in l1.coeffs()):
            gcd = HPoly(
                MPoly({(1, 0, 0): l1.a1, (0, 1, 0): l1.a2, (0, 0, 1): l1.a3})
            )
        raise CommonComponentError(gcd, detail="proportional lines")
    return RatPoint.normalized(x, y, z)


def point_cycle(p: RatPoint) -> GaloisCycle:
    """A rational point as its canonical degree-1 Galois cycle."""
    return GaloisCycle.rational_point(p.x, p.y, p.z)


# ---------------------------------------------------------------------
# the Euclidean step
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class EuclidStep:
    """Exact identity multiplier*A = quotient*divisor + remainder.

    multiplier and shared are x-free; the original divisor input factors as
    divisor*shared; divisor and remainder (and divisor and multiplier) are
    coprime, and the remainder's x-degree dropped below the divisor's.
    """

    multiplier: HPoly  # x-free
    quotient: HPoly
    divisor: HPoly
    remainder: HPoly
    shared: HPoly  # x-free

    def check(self, a: HPoly) -> bool:
        lhs = self.multiplier.poly * a.poly
        rhs = self.quotient.poly * self.divisor.poly + self.remainder.poly
        return lhs == rhs


def euclid_step(a: HPoly, b: HPoly) -> EuclidStep:
    """One exact division step; requires deg_x a >= deg_x b >= 1 and gcd 1."""
    q, r = ff_divide(a, b)
    if not r:
        raise CommonComponentError(gcd_homogeneous(a, b))
    h, qq, rr = clear_denominators(q, r)
    shared = gcd_homogeneous(b, rr)
    if shared.degree > 0:
        divisor = b.exact_div(shared)
        remainder = rr.exact_div(shared)
        multiplier = h.exact_div(shared)
    else:
        divisor, remainder, multiplier = b, rr, h
    step = EuclidStep(multiplier, qq, divisor, remainder, shared)
    if __debug__:
        assert step.check(a), "cleared division identity failed"
        assert step.remainder.x_degree < step.divisor.x_degree
        assert step.multiplier.is_x_free and step.shared.is_x_free
        assert gcd_homogeneous(step.divisor, step.remainder).degree == 0
        assert gcd_homogeneous(step.divisor, step.multiplier).degree == 0
    return step


# ---------------------------------------------------------------------
# base case: a curve against a product of lines
# ---------------------------------------------------------------------


def _cycles_at_z0(c: HPoly) -> Cycle:
    """C . z for a curve with z not dividing C: factor C(x, y, 0) over Q.

    The factor y contributes (1,0,0); every other irreducible factor p(x,y)
    contributes the cycle of p(x,1)'s roots on the line at infinity.
    """
    form = MPoly({(i, j, 0): v for (i, j, k), v in c.poly.terms.items() if k == 0})
    if form.is_zero:
        raise CommonComponentError(HPoly(MPoly.monomial((0, 0, 1))))
    e_y, fac = factor_binary_form(HPoly(form), X, Y)
    total = Cycle()
    if e_y:
        total = total + Cycle.of(GaloisCycle.point_at_infinity(), e_y)
    for p, mult in fac.factors:
        total = total + Cycle.of(GaloisCycle.c0(p, check=False), mult)
    return total


def _cycles_on_pencil(c: HPoly, g: UPoly, mult: int) -> Cycle:
    """C . (product of lines y = b*z over roots b of irreducible g).

    Splits C(x, b*z, z) over Q(b) as z^e0 * (monic factors); the z part
    lands at (1,0,0) once per root of g, and every factor h contributes the
    canonical double-sum cycle of (h, g).
    """
    field = NumberField.unchecked(g)
    beta = field.gen()
    e0, restriction = substitute_line(c, beta, field)
    total = Cycle()
    if e0:
        total = total + Cycle.of(GaloisCycle.point_at_infinity(), e0 * g.degree)
    if restriction.degree >= 1:
        fac = factor_nf(restriction)
        for h, m in fac.factors:
            total = total + Cycle.of(GaloisCycle.c1(h, g, check=False), m)
    return total * mult


def intersect_with_lines(c: HPoly, d: HPoly) -> Cycle:
    """Intersection cycle of a curve with an x-free curve (product of lines).

    d factors over Q into powers of z and of irreducible g(y) homogenized;
    contributions are additive over that factorization, with multiplicity.
    """
    if not d.is_x_free:
        raise ValueError("second curve must be free of x")
    if d.degree < 1:
        return Cycle()
    e_z, fac = factor_binary_form(d, Y, Z)
    total = Cycle()
    if e_z:
        total = total + _cycles_at_z0(c) * e_z
    for g, mult in fac.factors:
        total = total + _cycles_on_pencil(c, g, mult)
    return total


# ---------------------------------------------------------------------
# the recursion and the driver
# ---------------------------------------------------------------------


def euclid_reduce(a: HPoly, b: HPoly) -> Cycle:
    """Recursive cycle computation for coprime curves, both nonconstant."""
    # orient and route the x-free cases
    if a.x_degree < b.x_degree:
        a, b = b, a
    if b.is_x_free:
        if a.is_x_free:
            return Cycle.of(GaloisCycle.point_at_infinity(), a.degree * b.degree)
        return intersect_with_lines(a, b)
    # split off x-contents so the division runs on primitive operands
    cont_a, prim_a = x_content(a)
    cont_b, prim_b = x_content(b)
    total = Cycle()
    if cont_a.degree > 0:
        total = total + intersect_with_lines(b, cont_a)
    if cont_b.degree > 0:
        total = total + intersect_with_lines(prim_a, cont_b)
    a, b = prim_a, prim_b
    if a.x_degree < b.x_degree:
        a, b = b, a
    step = euclid_step(a, b)
    total = total + euclid_reduce(step.remainder, step.divisor)
    if step.multiplier.degree > 0:
        total = total - intersect_with_lines(step.divisor, step.multiplier)
    if step.shared.degree > 0:
        total = total + intersect_with_lines(a, step.shared)
    return total


def intersection_cycle(a, b) -> Cycle:
    """The full intersection cycle of two coprime plane curves.

    Accepts HPoly (or homogeneous MPoly) inputs.  Raises
    CommonComponentError when the curves share a factor; the finished cycle
    is checked for positivity and for the degree-product point count.
    """
    a = _as_hpoly(a)
    b = _as_hpoly(b)
    if a.degree == 0 or b.degree == 0:
        warnings.warn("a constant curve is empty; the intersection cycle is 0")
        return Cycle()
    shared = gcd_homogeneous(a, b)
    if shared.degree > 0:
        raise CommonComponentError(shared)
    result = euclid_reduce(a, b)
    if not result.all_positive:
        raise CycleInvariantError(
            f"negative coefficient in a finished cycle: {result.text()}"
        )
    expected = a.degree * b.degree
    if result.size != expected:
        raise CycleInvariantError(
            f"cycle has {result.size} points, expected {expected}"
        )
    return result


def _as_hpoly(p) -> HPoly:
    if isinstance(p, HPoly):
        return p
    if isinstance(p, MPoly):
        if p.is_zero:
            raise ValueError("zero polynomial does not define a curve")
        return HPoly(p)
    raise TypeError("expected an MPoly or HPoly curve")
