"""Resultants over exact coefficient rings.

The primary algorithm is the subresultant PRS (coefficient growth stays
polynomial); a fraction-free Sylvester determinant (Bareiss elimination) is
kept as an independent cross-check for small inputs and is used by the test
suite as the oracle for the PRS path.

Polynomials are dense coefficient lists, low to high.  A ring is described
by a tiny adapter: elements must support ``+``, ``-``, ``*``, unary ``-``
and truthiness; the adapter supplies the unit and exact division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable


@dataclass(frozen=True)
class Ring:
    one: Any
    exact_div: Callable[[Any, Any], Any]


def _frac_div(a, b):
    return a / b


FRACTION_RING = Ring(one=Fraction(1), exact_div=_frac_div)


def _mpoly_ring():
    from .mpoly import MPoly

    return Ring(one=MPoly.constant(1), exact_div=lambda a, b: a.exact_div(b))


MPOLY_RING = _mpoly_ring()


def upoly_ring(domain) -> Ring:
    from .upoly import UPoly

    return Ring(one=UPoly.one(domain), exact_div=lambda a, b: a.exact_div(b))


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder rem(lc(b)^(da-db+1) * a, b); exact in any ring."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        r = [lc * c for c in r]
        if top:
            for j in range(db + 1):
                r[i + j] = r[i + j] - top * b[j]
    return _trim(r[:db] if db > 0 else [])


def _pow(ring: Ring, a, n: int):
    acc = ring.one
    for _ in range(n):
        acc = acc * a
    return acc


def resultant(a: list, b: list, ring: Ring):
    """Resultant of two coefficient lists by the subresultant PRS.

    Follows the classical formulation: divide each pseudo-remainder by
    g*h^d where g is the previous leading coefficient and h the running
    subresultant scale; every division is exact in the ring.
    """
    a = _trim(a)
    b = _trim(b)
    if not a or not b:
        raise ValueError("resultant of the zero polynomial")
    zero = ring.one - ring.one
    sign = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2 == 1:
            sign = -sign
        a, b = b, a
    if len(b) == 1:
        res = _pow(ring, b[0], len(a) - 1)
        return res if sign == 1 else -res
    g = ring.one
    h = ring.one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2 == 1) and (db % 2 == 1):
            sign = -sign
        r = _prem(a, b)
        a, b = b, r
        if not b:
            return zero
        divisor = g
        for _ in range(delta):
            divisor = divisor * h
        b = [ring.exact_div(c, divisor) for c in b]
        g = a[-1]
        if delta > 0:
            h = ring.exact_div(_pow(ring, g, delta), _pow(ring, h, delta - 1))
        if len(b) == 1:
            break
    # final step: deg b == 0
    da = len(a) - 1
    res = ring.exact_div(_pow(ring, b[0], da), _pow(ring, h, da - 1))
    return res if sign == 1 else -res


def sylvester_matrix(a: list, b: list, ring: Ring) -> list[list]:
    a = _trim(a)
    b = _trim(b)
    m, n = len(a) - 1, len(b) - 1
    if m < 1 and n < 1:
        raise ValueError("need at least one nonconstant input")
    zero = ring.one - ring.one
    size = m + n
    rows = []
    rev_a = list(reversed(a))
    rev_b = list(reversed(b))
    for i in range(n):
        rows.append([zero] * i + rev_a + [zero] * (size - i - len(rev_a)))
    for i in range(m):
        rows.append([zero] * i + rev_b + [zero] * (size - i - len(rev_b)))
    return rows


def bareiss_det(matrix: list[list], ring: Ring):
    """Fraction-free determinant; all divisions are exact in the ring."""
    m = [row[:] for row in matrix]
    n = len(m)
    zero = ring.one - ring.one
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = ring.exact_div(val, prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_resultant(a: list, b: list, ring: Ring):
    """Determinant-based resultant; the independent cross-check."""
    return bareiss_det(sylvester_matrix(a, b, ring), ring)
