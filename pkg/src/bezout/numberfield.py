"""The exact coefficient tower: rationals and single algebraic extensions Q(b).

``QQ`` is the rational domain (elements are :class:`fractions.Fraction`,
which already stores every value fully reduced with a positive denominator).
:class:`NumberField` models Q[t]/(g(t)) for a monic irreducible g, with
:class:`NFElem` elements kept in canonical reduced form.  All values are
immutable, so they are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .upoly import UPoly

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RationalField:
    """Domain object for Q; a process-wide singleton (``QQ``)."""

    zero = _ZERO
    one = _ONE

    @staticmethod
    def convert(v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise TypeError(f"cannot convert {v!r} to a rational")

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(RationalField)


QQ = RationalField()


# ---------------------------------------------------------------------
# raw coefficient-tuple helpers (low to high, trailing zeros trimmed)
# ---------------------------------------------------------------------


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO) for i in range(n)])


def _neg(a):
    return tuple(-c for c in a)


def _mul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _rem_monic(a, m):
    """Remainder of a modulo the monic tuple m."""
    r = list(a)
    dm = len(m) - 1
    for i in range(len(r) - 1 - dm, -1, -1):
        c = r[i + dm]
        if c:
            for j in range(dm + 1):
                r[i + j] -= c * m[j]
    return _trim(r[:dm])


def _invert(a, m):
    """Inverse of a modulo the monic tuple m, by the extended Euclidean algorithm."""
    if not a:
        raise ZeroDivisionError("inverse of zero in a number field")
    r0, r1 = tuple(m), tuple(a)
    t0, t1 = (), (_ONE,)
    while r1:
        # divide r0 by r1
        q = [_ZERO] * max(len(r0) - len(r1) + 1, 1)
        rem = list(r0)
        inv_lc = 1 / r1[-1]
        d1 = len(r1) - 1
        for i in range(len(rem) - 1 - d1, -1, -1):
            c = rem[i + d1] * inv_lc
            q[i] = c
            if c:
                for j in range(d1 + 1):
                    rem[i + j] -= c * r1[j]
        r0, r1 = r1, _trim(rem[: d1 if d1 > 0 else 0])
        t0, t1 = t1, _add(t0, _neg(_mul(_trim(q), t1)))
    # r0 is a nonzero constant gcd: a invertible because m is irreducible
    if len(r0) != 1:
        raise ZeroDivisionError("element shares a factor with the modulus")
    scale = 1 / r0[0]
    return _trim([c * scale for c in t0])


class NFElem:
    """An element of Q[t]/(g(t)), stored as its canonical reduced coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "NumberField", coeffs):
        cs = [QQ.convert(c) for c in coeffs]
        if len(cs) > field.degree:
            coeffs = _rem_monic(cs, field._mod)
        else:
            coeffs = _trim(cs)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("NFElem is immutable")

    # -- queries --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            v = Fraction(other)
            if not v:
                return not self.coeffs
            return self.coeffs == (v,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    @property
    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_fraction(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError("element is not rational")

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        return NFElem(self.field, (QQ.convert(other),))

    def __add__(self, other) -> "NFElem":
        other = self._coerce(other)
        return NFElem(self.field, _add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "NFElem":
        return NFElem(self.field, _neg(self.coeffs))

    def __sub__(self, other) -> "NFElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NFElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NFElem":
        other = self._coerce(other)
        return NFElem(self.field, _rem_monic(_mul(self.coeffs, other.coeffs), self.field._mod))

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        return NFElem(self.field, _invert(self.coeffs, self.field._mod))

    def __truediv__(self, other) -> "NFElem":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "NFElem":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "NFElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- printing ---------------------------------------------------------

    def text(self, var: str = "t") -> str:
        return UPoly(QQ, self.coeffs).text(var)

    def __repr__(self) -> str:
        return f"NFElem({self.text()})"


class NumberField:
    """Q[t]/(g(t)) for a monic irreducible g over Q.

    Construction verifies irreducibility through the factorization engine;
    use :meth:`unchecked` when the modulus is already certified (for example
    a factor returned by the engine itself).
    """

    __slots__ = ("_mod", "degree")

    def __init__(self, modulus: UPoly, *, check: bool = True):
        if modulus.domain != QQ:
            raise ValueError("modulus must have rational coefficients")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        if check:
            from .factor import is_irreducible_q

            if not is_irreducible_q(modulus):
                raise ValueError(f"modulus {modulus.text('t')} is reducible over Q")
        object.__setattr__(self, "_mod", modulus.coeffs)
        object.__setattr__(self, "degree", modulus.degree)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    @classmethod
    def unchecked(cls, modulus: UPoly) -> "NumberField":
        return cls(modulus, check=False)

    @property
    def modulus(self) -> UPoly:
        return UPoly(QQ, self._mod)

    @property
    def zero(self) -> NFElem:
        return NFElem(self, ())

    @property
    def one(self) -> NFElem:
        return NFElem(self, (_ONE,))

    def gen(self) -> NFElem:
        """The residue of t, i.e. the defining root of the modulus."""
        return NFElem(self, (_ZERO, _ONE))

    def convert(self, v) -> NFElem:
        if isinstance(v, NFElem):
            if v.field != self:
                raise ValueError("element of a different number field")
            return v
        return NFElem(self, (QQ.convert(v),))

    def element(self, coeffs) -> NFElem:
        return NFElem(self, coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self._mod == other._mod

    def __hash__(self) -> int:
        return hash(self._mod)

    def __repr__(self) -> str:
        return f"NumberField({self.modulus.text('t')})"
