"""Dense univariate polynomials over an exact coefficient domain.

A coefficient domain is any object exposing ``zero``, ``one`` and
``convert``; the rationals (``QQ`` in :mod:`bezout.numberfield`) and number
fields both qualify.  Arithmetic goes through the coefficients' own
operators, so everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class UPoly:
    """Univariate polynomial; coefficients stored low to high, no trailing zeros."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs):
        cs = [domain.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, domain) -> "UPoly":
        return cls(domain, ())

    @classmethod
    def one(cls, domain) -> "UPoly":
        return cls(domain, (domain.one,))

    @classmethod
    def constant(cls, domain, c) -> "UPoly":
        return cls(domain, (c,))

    @classmethod
    def gen(cls, domain) -> "UPoly":
        """The polynomial x."""
        return cls(domain, (domain.zero, domain.one))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient (of the zero polynomial: the domain zero)."""
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UPoly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == self.domain.one

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.domain != self.domain:
                raise ValueError("mixed coefficient domains")
            return other
        return UPoly(self.domain, (other,))

    def __add__(self, other) -> "UPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.domain, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other) -> "UPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            c = self.domain.convert(other)
            return UPoly(self.domain, [c * a for a in self.coeffs])
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return UPoly.zero(self.domain)
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.domain, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UPoly.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder; the divisor's leading coefficient must be invertible."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        lc_inv = self.domain.one / other.lc
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly.zero(self.domain), self
        quo = [self.domain.zero] * (dq + 1)
        db = other.degree
        for i in range(dq, -1, -1):
            c = rem[i + db] * lc_inv
            quo[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return UPoly(self.domain, quo), UPoly(self.domain, rem[:db])

    def __floordiv__(self, other) -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    # -- derived operations -------------------------------------------

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        inv = self.domain.one / self.lc
        return UPoly(self.domain, [c * inv for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly(
            self.domain, [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def compose(self, inner: "UPoly") -> "UPoly":
        """self(inner(x)), by Horner."""
        inner = self._coerce(inner)
        acc = UPoly.zero(self.domain)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "UPoly":
        """self(x + c)."""
        return self.compose(UPoly(self.domain, (c, self.domain.one)))

    def evaluate(self, v):
        """Horner evaluation at ``v``; ``v`` may live in a larger ring."""
        acc = v - v  # zero of v's ring
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def map_coeffs(self, domain, fn) -> "UPoly":
        return UPoly(domain, [fn(c) for c in self.coeffs])

    # -- printing -----------------------------------------------------

    def text(self, var: str = "x", gen_var: str = "t") -> str:
        from .parsing import format_nf_upoly, format_upoly

        if self.coeffs and not isinstance(self.coeffs[0], Fraction):
            return format_nf_upoly(self, var, gen_var)
        return format_upoly(self, var)

    def __repr__(self) -> str:
        return f"UPoly({self.text()})"


# ---------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------


def gcd_monic(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm over any coefficient field."""
    if f.domain != g.domain:
        raise ValueError("mixed coefficient domains")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def gcd_rational(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd over the rationals, via a primitive PRS over the integers.

    Faster than fraction Euclid once degrees grow, because contents are
    integer gcds rather than rational reductions.
    """
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    a, _ = to_int_coeffs(f)
    b, _ = to_int_coeffs(g)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _int_prem(a, b)
        if not r:
            break
        r = _int_primitive(r)
        a, b = b, r
    if len(b) == 1:
        return UPoly.one(f.domain)
    return UPoly(f.domain, b).monic()


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd, dispatching to the integer PRS when coefficients are rational."""
    if f.coeffs and isinstance(f.coeffs[0], Fraction):
        return gcd_rational(f, g)
    if g.coeffs and isinstance(g.coeffs[0], Fraction):
        return gcd_rational(f, g)
    return gcd_monic(f, g)


def gcdex(f: UPoly, g: UPoly):
    """Extended Euclid: (d, s, t) with d = s*f + t*g, d monic (or zero)."""
    dom = f.domain
    r0, r1 = f, g
    s0, s1 = UPoly.one(dom), UPoly.zero(dom)
    t0, t1 = UPoly.zero(dom), UPoly.one(dom)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = dom.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


# ---------------------------------------------------------------------
# integer-coefficient helpers (shared with the factorization engine)
# ---------------------------------------------------------------------


def to_int_coeffs(f: UPoly) -> tuple[list[int], Fraction]:
    """Write f = unit * p with p a primitive integer polynomial, positive lc.

    Returns (coefficients of p, unit).  f must be nonzero over QQ.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    cont = 0
    for c in ints:
        cont = _int_gcd(cont, c)
    if ints[-1] < 0:
        cont = -cont
    ints = [c // cont for c in ints]
    return ints, Fraction(cont, den)


def from_int_coeffs(domain, coeffs: list[int]) -> UPoly:
    return UPoly(domain, [Fraction(c) for c in coeffs])


def _int_primitive(f: list[int]) -> list[int]:
    cont = 0
    for c in f:
        cont = _int_gcd(cont, c)
    if f[-1] < 0:
        cont = -cont
    return [c // cont for c in f]


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low to high)."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lc = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        for j in range(len(r)):
            r[j] *= lc
        if top:
            for j in range(db + 1):
                r[i + j] -= top * b[j]
        # keep the classical lc^(delta+1) scaling exact but trim as we go
        r[i + db] = 0
    while r and r[-1] == 0:
        r.pop()
    return r
