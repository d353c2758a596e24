"""Galois cycles and integer-weighted formal sums of them.

A Galois cycle is one of three canonical shapes: the point (1,0,0); the sum
of the points (a,1,0) over the roots a of a monic irreducible f in Q[x]; or
the double sum of points (c,b,1) over roots b of a monic irreducible g in
Q[y] and roots c of a monic irreducible h in Q(b)[x].  Distinct canonical
cycles describe disjoint point sets, which is what makes the signed
bookkeeping of the reduction cancel correctly.

``Cycle`` is an ordered formal sum with integer coefficients.  Negative
coefficients are legal in intermediate results; finished intersection
cycles must be strictly positive and that is asserted where they are
produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .factor import factor_nf, factor_q, upoly_sort_key
from .numberfield import NumberField, QQ
from .upoly import UPoly

PINF = "pinf"
C0 = "c0"
C1 = "c1"


@dataclass(frozen=True)
class GaloisCycle:
    kind: str
    f: UPoly | None = None  # C0: monic irreducible over Q, variable x
    h: UPoly | None = None  # C1: monic irreducible over Q(b), variable x
    g: UPoly | None = None  # C1: monic irreducible over Q, variable y

    # -- constructors ---------------------------------------------------

    @staticmethod
    def point_at_infinity() -> "GaloisCycle":
        return _PINF_SINGLETON

    @staticmethod
    def c0(f: UPoly, *, check: bool = True) -> "GaloisCycle":
        """The sum over roots a of f of the points (a, 1, 0)."""
        if f.domain != QQ:
            raise ValueError("C0 data must be rational")
        if f.degree < 1:
            raise ValueError("C0 needs a nonconstant polynomial")
        f = f.monic()
        if check and not _is_irreducible_q_cached(f):
            raise ValueError(f"C0 data is reducible: {f.text()}")
        return GaloisCycle(C0, f=f)

    @staticmethod
    def c1(h: UPoly, g: UPoly, *, check: bool = True) -> "GaloisCycle":
        """The double sum over roots b of g and roots c of h of (c, b, 1).

        h lives over Q[y]/(g); it is stored monic in x with its coefficients
        in canonical reduced form, which pins the cycle down uniquely.
        """
        if g.domain != QQ:
            raise ValueError("C1 modulus must be rational")
        g = g.monic()
        if g.degree < 1:
            raise ValueError("C1 modulus must be nonconstant")
        if check and not _is_irreducible_q_cached(g):
            raise ValueError(f"C1 modulus is reducible: {g.text('y')}")
        field = h.domain
        if not isinstance(field, NumberField) or field.modulus != g:
            raise ValueError("h must live over the field defined by g")
        if h.degree < 1:
            raise ValueError("C1 needs a nonconstant polynomial")
        h = h.monic()
        if check:
            fac = factor_nf(h)
            if len(fac.factors) != 1 or fac.factors[0][1] != 1:
                raise ValueError(f"C1 data is reducible over its field: {h.text()}")
        return GaloisCycle(C1, h=h, g=g)

    @staticmethod
    def rational_point(x, y, z) -> "GaloisCycle":
        """Encode a rational projective point as its degree-1 cycle."""
        x, y, z = QQ.convert(x), QQ.convert(y), QQ.convert(z)
        if z:
            x, y = x / z, y / z
            g = UPoly(QQ, (-y, 1))
            field = NumberField.unchecked(g)
            h = UPoly(field, (field.convert(-x), field.one))
            return GaloisCycle.c1(h, g, check=False)
        if y:
            return GaloisCycle.c0(UPoly(QQ, (-x / y, 1)), check=False)
        if x:
            return GaloisCycle.point_at_infinity()
        raise ValueError("(0,0,0) is not a projective point")

    # -- queries -----------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of points in the cycle, with multiplicity."""
        if self.kind == PINF:
            return 1
        if self.kind == C0:
            return self.f.degree
        return self.h.degree * self.g.degree

    def sort_key(self):
        if self.kind == PINF:
            return (0,)
        if self.kind == C0:
            return (1, upoly_sort_key(self.f))
        return (2, upoly_sort_key(self.g), self.h.degree,
                tuple(c.coeffs for c in reversed(self.h.coeffs)))

    def text(self) -> str:
        from .parsing import format_nf_upoly

        if self.kind == PINF:
            return "(1,0,0)"
        if self.kind == C0:
            return f"C0({self.f.text('x')})"
        return f"C1({format_nf_upoly(self.h, 'x', 'y')}; {self.g.text('y')})"

    def __repr__(self) -> str:
        return f"GaloisCycle({self.text()})"


_PINF_SINGLETON = GaloisCycle(PINF)

_IRREDUCIBLE_CACHE: dict = {}


def _is_irreducible_q_cached(f: UPoly) -> bool:
    key = f.coeffs
    hit = _IRREDUCIBLE_CACHE.get(key)
    if hit is None:
        fac = factor_q(f)
        hit = len(fac.factors) == 1 and fac.factors[0][1] == 1
        _IRREDUCIBLE_CACHE[key] = hit
    return hit


class Cycle:
    """Integer-weighted formal sum of Galois cycles; iteration is canonical."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict | None = None):
        clean = {}
        if entries:
            for gc, k in entries.items():
                if k:
                    clean[gc] = int(k)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Cycle is immutable")

    @classmethod
    def zero(cls) -> "Cycle":
        return cls()

    @classmethod
    def of(cls, gc: GaloisCycle, mult: int = 1) -> "Cycle":
        return cls({gc: mult})

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "Cycle") -> "Cycle":
        out = dict(self.entries)
        for gc, k in other.entries.items():
            s = out.get(gc, 0) + k
            if s:
                out[gc] = s
            else:
                out.pop(gc, None)
        return Cycle(out)

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + other * -1

    def __mul__(self, k: int) -> "Cycle":
        if not isinstance(k, int):
            raise TypeError("cycles scale by integers")
        if k == 0:
            return Cycle()
        return Cycle({gc: k * m for gc, m in self.entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Cycle) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def sorted_entries(self) -> list[tuple[GaloisCycle, int]]:
        return sorted(self.entries.items(), key=lambda e: e[0].sort_key())

    @property
    def all_positive(self) -> bool:
        return all(k > 0 for k in self.entries.values())

    @property
    def size(self) -> int:
        """Total point count with multiplicity; defined for positive cycles only."""
        if not self.all_positive:
            raise ValueError("size is undefined for cycles with negative coefficients")
        return sum(k * gc.size for gc, k in self.entries.items())

    def text(self) -> str:
        if not self.entries:
            return "0"
        parts = []
        for gc, k in self.sorted_entries():
            body = gc.text()
            if k == 1:
                parts.append(body)
            elif k == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{k}*{body}")
        return " + ".join(parts)

    def to_json_entries(self) -> list[dict]:
        from .parsing import format_nf_upoly

        out = []
        for gc, k in self.sorted_entries():
            entry = {"type": {PINF: "Pinf", C0: "C0", C1: "C1"}[gc.kind], "mult": k}
            if gc.kind == C0:
                entry["f"] = gc.f.text("x")
            elif gc.kind == C1:
                entry["g"] = gc.g.text("y")
                entry["h"] = format_nf_upoly(gc.h, "x", "y")
            entry["size"] = gc.size
            out.append(entry)
        return out

    def __repr__(self) -> str:
        return f"Cycle({self.text()})"
