"""Sparse polynomials in x, y, z over Q, and the homogeneous layer on top.

``MPoly`` is the raw sparse representation (exponent triple -> coefficient,
graded-lex term order with x > y > z).  ``HPoly`` wraps a nonzero
homogeneous ``MPoly`` together with its degree; every operation that is
supposed to preserve homogeneity re-validates it through the ``HPoly``
constructor, so a homogeneity bug cannot propagate silently.

The division machinery works over the fraction field of Q[y,z]: an
x-coefficient of a homogeneous polynomial is a binary form in (y, z), and
``BiRat`` holds a reduced ratio of two such forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .numberfield import QQ
from .upoly import UPoly, gcd_rational

VARS = ("x", "y", "z")
X, Y, Z = 0, 1, 2

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _order_key(e):
    # graded lexicographic, x > y > z
    return (e[0] + e[1] + e[2], e)


class MPoly:
    """Sparse polynomial in x, y, z with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = QQ.convert(c)
                if c:
                    clean[(int(e[0]), int(e[1]), int(e[2]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, v: int) -> "MPoly":
        e = [0, 0, 0]
        e[v] = 1
        return cls({tuple(e): _ONE})

    @classmethod
    def monomial(cls, e, c=_ONE) -> "MPoly":
        return cls({tuple(e): c})

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j + k for (i, j, k) in self.terms)

    def var_degree(self, v: int) -> int:
        if not self.terms:
            return -1
        return max(e[v] for e in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        degs = {i + j + k for (i, j, k) in self.terms}
        return len(degs) <= 1

    def uses_var(self, v: int) -> bool:
        return any(e[v] for e in self.terms)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_order_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.constant(other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = QQ.convert(other)
            if not c:
                return MPoly.zero()
            return MPoly({e: c * v for e, v in self.terms.items()})
        out: dict = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Exact division; raises ValueError when the divisor does not divide."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return MPoly.zero()
        rem = dict(self.terms)
        de, dc = divisor.leading()
        quo: dict = {}
        while rem:
            e = max(rem, key=_order_key)
            c = rem[e]
            q = (e[0] - de[0], e[1] - de[1], e[2] - de[2])
            if min(q) < 0:
                raise ValueError("inexact polynomial division")
            qc = c / dc
            quo[q] = quo.get(q, _ZERO) + qc
            for fe, fc in divisor.terms.items():
                t = (q[0] + fe[0], q[1] + fe[1], q[2] + fe[2])
                s = rem.get(t, _ZERO) - qc * fc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return MPoly(quo)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # -- substitution ---------------------------------------------------------

    def upoly_in(self, v: int, values: dict, domain) -> UPoly:
        """View self as a univariate polynomial in variable ``v``.

        ``values`` maps each of the other two variable indices to a domain
        element; their powers are tabulated up front.
        """
        others = [w for w in range(3) if w != v]
        pows = {}
        for w in others:
            lst = [domain.one]
            for _ in range(max(self.var_degree(w), 0)):
                lst.append(lst[-1] * values[w])
            pows[w] = lst
        coeffs = [domain.zero] * (self.var_degree(v) + 1 if self.terms else 0)
        for e, c in self.terms.items():
            val = domain.convert(c)
            for w in others:
                if e[w]:
                    val = val * pows[w][e[w]]
            coeffs[e[v]] = coeffs[e[v]] + val
        return UPoly(domain, coeffs)

    def subst_linear(self, images: list["MPoly"]) -> "MPoly":
        """Substitute each variable by the given polynomial (used for shears)."""
        pow_cache = [{0: MPoly.constant(1)} for _ in range(3)]

        def pw(v, n):
            cache = pow_cache[v]
            while n not in cache:
                m = max(cache)
                cache[m + 1] = cache[m] * images[v]
            return cache[n]

        acc = MPoly.zero()
        for (i, j, k), c in self.terms.items():
            acc = acc + pw(0, i) * pw(1, j) * pw(2, k) * c
        return acc

    def split_var_power(self, v: int) -> tuple[int, "MPoly"]:
        """Largest k with var^k dividing self, and the cofactor."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        k = min(e[v] for e in self.terms)
        if k == 0:
            return 0, self
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[v] -= k
            out[tuple(ne)] = c
        return k, MPoly(out)

    def x_coefficients(self) -> list["MPoly"]:
        """Coefficients of powers of x, low to high, as x-free polynomials."""
        if self.is_zero:
            return []
        rows: list[dict] = [{} for _ in range(self.var_degree(X) + 1)]
        for (i, j, k), c in self.terms.items():
            rows[i][(0, j, k)] = c
        return [MPoly(r) for r in rows]

    @classmethod
    def from_x_coefficients(cls, rows: Iterable["MPoly"]) -> "MPoly":
        out: dict = {}
        for i, row in enumerate(rows):
            for (_, j, k), c in row.terms.items():
                out[(i, j, k)] = c
        return cls(out)

    def evaluate(self, vx, vy, vz):
        """Numeric or symbolic evaluation at a coordinate triple."""
        acc = None
        for (i, j, k), c in self.terms.items():
            term = c * vx**i * vy**j * vz**k
            acc = term if acc is None else acc + term
        return acc if acc is not None else 0 * vx

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        from .parsing import format_mpoly

        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({self})"


class HPoly:
    """A nonzero homogeneous polynomial together with its total degree."""

    __slots__ = ("poly", "degree")

    def __init__(self, poly: MPoly):
        if poly.is_zero:
            raise ValueError("HPoly must be nonzero")
        if not poly.is_homogeneous:
            raise ValueError(f"polynomial is not homogeneous: {poly}")
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "degree", poly.total_degree)

    def __setattr__(self, name, value):
        raise AttributeError("HPoly is immutable")

    @property
    def x_degree(self) -> int:
        return self.poly.var_degree(X)

    def var_degree(self, v: int) -> int:
        return self.poly.var_degree(v)

    @property
    def is_x_free(self) -> bool:
        return not self.poly.uses_var(X)

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    def __mul__(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            return HPoly(self.poly * other.poly)
        return HPoly(self.poly * other)

    __rmul__ = __mul__

    def __add__(self, other: "HPoly") -> "HPoly":
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        return HPoly(self.poly + other.poly)

    def __sub__(self, other: "HPoly") -> "HPoly":
        if self.degree != other.degree:
            raise ValueError("cannot subtract homogeneous polynomials of different degrees")
        return HPoly(self.poly - other.poly)

    def __pow__(self, n: int) -> "HPoly":
        return HPoly(self.poly**n)

    def exact_div(self, other: "HPoly") -> "HPoly":
        return HPoly(self.poly.exact_div(other.poly))

    def normalized(self) -> "HPoly":
        """Scaled so the graded-lex leading coefficient is 1."""
        _, c = self.poly.leading()
        if c == _ONE:
            return self
        return HPoly(self.poly * (1 / c))

    def __eq__(self, other) -> bool:
        return isinstance(other, HPoly) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"HPoly({self.poly}, deg={self.degree})"


def homogenize(p: MPoly) -> HPoly:
    """Lift an affine polynomial in x, y to the homogeneous form of its total degree."""
    if p.is_zero:
        raise ValueError("cannot homogenize the zero polynomial")
    if p.uses_var(Z):
        raise ValueError("affine input must use only x and y")
    d = p.total_degree
    return HPoly(MPoly({(i, j, d - i - j): c for (i, j, _), c in p.terms.items()}))


def dehomogenize(p: HPoly, v: int = Z) -> MPoly:
    """Set one variable to 1."""
    out: dict = {}
    for e, c in p.poly.terms.items():
        ne = list(e)
        ne[v] = 0
        key = tuple(ne)
        s = out.get(key, _ZERO) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return MPoly(out)


# ---------------------------------------------------------------------
# binary forms in (y, z): the coefficient ring of the x-direction view
# ---------------------------------------------------------------------


def bform_to_upoly(p: MPoly, u: int, v: int) -> tuple[int, UPoly]:
    """Split a binary form as v^e * (homogenization of f) and return (e, f).

    ``p`` must be nonzero and use only variables u and v; f = p(u=t, v=1)
    after the explicit power of v is removed, so f has a nonzero constant
    term exactly when ``u`` does not divide the cofactor.
    """
    if p.is_zero:
        raise ValueError("zero binary form")
    third = 3 - u - v
    if p.uses_var(third):
        raise ValueError("polynomial uses a variable outside the binary form")
    e = min(t[v] for t in p.terms)
    deg = max(t[u] for t in p.terms)
    coeffs = [_ZERO] * (deg + 1)
    for t, c in p.terms.items():
        coeffs[t[u]] += c
    return e, UPoly(QQ, coeffs)


def upoly_to_bform(f: UPoly, u: int, v: int, extra_v: int = 0) -> MPoly:
    """Homogenize a univariate polynomial into variables (u, v), times v^extra_v."""
    if f.is_zero:
        return MPoly.zero()
    d = f.degree
    out = {}
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        e = [0, 0, 0]
        e[u] = i
        e[v] = d - i + extra_v
        out[tuple(e)] = c
    return MPoly(out)


def gcd_yz(p: MPoly, q: MPoly) -> MPoly:
    """gcd of two binary forms in (y, z), normalized to leading coefficient 1."""
    if p.is_zero:
        return _monic_grlex(q)
    if q.is_zero:
        return _monic_grlex(p)
    ey_p, p1 = p.split_var_power(Y)
    ey_q, q1 = q.split_var_power(Y)
    ez_p, fp = bform_to_upoly(p1, Y, Z)
    ez_q, fq = bform_to_upoly(q1, Y, Z)
    g = gcd_rational(fp, fq)
    core = upoly_to_bform(g, Y, Z)
    mono = MPoly.monomial((0, min(ey_p, ey_q), min(ez_p, ez_q)))
    return _monic_grlex(core * mono)


def lcm_yz(p: MPoly, q: MPoly) -> MPoly:
    g = gcd_yz(p, q)
    return _monic_grlex(p * q.exact_div(g))


def _monic_grlex(p: MPoly) -> MPoly:
    if p.is_zero:
        return p
    _, c = p.leading()
    if c == _ONE:
        return p
    return p * (1 / c)


# ---------------------------------------------------------------------
# trivariate homogeneous gcd
# ---------------------------------------------------------------------


def _to_xy_rows(p: MPoly) -> list[UPoly]:
    """Coefficients of powers of x as univariate polynomials in y (z absent)."""
    rows: list[list[Fraction]] = [
        [_ZERO] * (p.var_degree(Y) + 1) for _ in range(p.var_degree(X) + 1)
    ]
    for (i, j, k), c in p.terms.items():
        if k:
            raise ValueError("polynomial still uses z")
        rows[i][j] += c
    return [UPoly(QQ, r) for r in rows]


def _from_xy_rows(rows: list[UPoly]) -> MPoly:
    out = {}
    for i, row in enumerate(rows):
        for j, c in enumerate(row.coeffs):
            if c:
                out[(i, j, 0)] = c
    return MPoly(out)


def _xy_content(rows: list[UPoly]) -> UPoly:
    cont = UPoly.zero(QQ)
    for r in rows:
        if not r.is_zero:
            cont = gcd_rational(cont, r) if not cont.is_zero else r.monic()
    return cont


def _prem_xy(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """Pseudo-remainder of bivariate polynomials viewed in x over Q[y]."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        r = [lc * c for c in r]
        if not top.is_zero:
            for j in range(db + 1):
                r[i + j] = r[i + j] - top * b[j]
    while r and r[-1].is_zero:
        r.pop()
    return r


def _primitive_xy(rows: list[UPoly]) -> list[UPoly]:
    cont = _xy_content(rows)
    if cont.degree <= 0:
        return rows
    return [r.exact_div(cont) for r in rows]


def _gcd_bivariate_xy(a: MPoly, b: MPoly) -> MPoly:
    """gcd in Q[x, y] by a primitive PRS in x over Q[y]."""
    ra = _to_xy_rows(a)
    rb = _to_xy_rows(b)
    cont = gcd_rational(_xy_content(ra), _xy_content(rb))
    pa = _primitive_xy(ra)
    pb = _primitive_xy(rb)
    if len(pa) == 1 or len(pb) == 1:
        # one side is free of x after content removal
        pp_rows = [UPoly.one(QQ)]
    else:
        f, g = (pa, pb) if len(pa) >= len(pb) else (pb, pa)
        while True:
            r = _prem_xy(f, g)
            if not r:
                break
            f, g = g, _primitive_xy(r)
        pp_rows = _primitive_xy(g) if len(g) > 1 else [UPoly.one(QQ)]
    core = _from_xy_rows(pp_rows)
    if cont.degree > 0:
        core = core * _from_xy_rows([cont])
    return core


def gcd_homogeneous(a: HPoly, b: HPoly) -> HPoly:
    """gcd of homogeneous polynomials, leading (graded-lex) coefficient 1.

    Strategy: peel off explicit powers of z, dehomogenize the cofactors at
    z = 1, take a bivariate gcd in Q[x, y], and rehomogenize to its own
    total degree.  Factors of homogeneous polynomials are homogeneous, so
    nothing is lost in the round trip.
    """
    za, a1 = a.poly.split_var_power(Z)
    zb, b1 = b.poly.split_var_power(Z)
    aff_a = dehomogenize(HPoly(a1), Z)
    aff_b = dehomogenize(HPoly(b1), Z)
    g_aff = _gcd_bivariate_xy(aff_a, aff_b)
    d = g_aff.total_degree
    out = {}
    for (i, j, _), c in g_aff.terms.items():
        out[(i, j, d - i - j)] = c
    g = MPoly(out) * MPoly.monomial((0, 0, min(za, zb)))
    return HPoly(g).normalized()


# ---------------------------------------------------------------------
# the fraction field of Q[y, z] (reduced ratios of binary forms)
# ---------------------------------------------------------------------


class BiRat:
    """A reduced ratio num/den of binary forms in (y, z).

    The denominator is normalized to leading coefficient 1; zero is 0/1.
    Sums only ever combine ratios whose numerator-minus-denominator degree
    agrees, so homogeneity is preserved (and asserted).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, *, _reduced: bool = False):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = MPoly.zero(), MPoly.constant(1)
        elif not _reduced:
            g = gcd_yz(num, den)
            if g.total_degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            _, lc = den.leading()
            if lc != _ONE:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        assert num.is_homogeneous and den.is_homogeneous, "BiRat parts must stay homogeneous"
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("BiRat is immutable")

    @classmethod
    def from_mpoly(cls, p: MPoly) -> "BiRat":
        return cls(p, MPoly.constant(1), _reduced=True)

    @classmethod
    def zero(cls) -> "BiRat":
        return cls(MPoly.zero(), MPoly.constant(1), _reduced=True)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.total_degree == 0

    def __add__(self, other: "BiRat") -> "BiRat":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return BiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "BiRat":
        return BiRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other: "BiRat") -> "BiRat":
        return self + (-other)

    def __mul__(self, other: "BiRat") -> "BiRat":
        if self.is_zero or other.is_zero:
            return BiRat.zero()
        return BiRat(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "BiRat") -> "BiRat":
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return BiRat(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiRat) and self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        if self.is_polynomial:
            return f"({self.num})"
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------
# division over the fraction field, denominator clearing, content
# ---------------------------------------------------------------------


def ff_divide(a: HPoly, b: HPoly) -> tuple[list[BiRat], list[BiRat]]:
    """Divide a by b in x over the fraction field of Q[y, z].

    Returns (q, r) as dense BiRat coefficient lists (low to high) with
    a = q*b + r and deg_x r < deg_x b.  Requires deg_x a >= deg_x b >= 1.
    """
    da, db = a.x_degree, b.x_degree
    if db < 1:
        raise ValueError("divisor must have positive x-degree")
    if da < db:
        raise ValueError("dividend must have x-degree at least the divisor's")
    ac = [BiRat.from_mpoly(c) for c in a.poly.x_coefficients()]
    bc = [BiRat.from_mpoly(c) for c in b.poly.x_coefficients()]
    rem = list(ac)
    quo = [BiRat.zero()] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = rem[i + db] / bc[db]
        quo[i] = c
        if not c.is_zero:
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - c * bc[j]
    rem = rem[:db]
    while rem and rem[-1].is_zero:
        rem.pop()
    return quo, rem


def clear_denominators(
    q: list[BiRat], r: list[BiRat]
) -> tuple[HPoly, HPoly, HPoly]:
    """Multiply q, r through by the lcm H of their denominators.

    Returns (H, Q, R) with H*a = Q*b + R for the (a, b) the division came
    from.  The remainder must be nonzero (a zero remainder means the inputs
    shared a factor of positive x-degree).
    """
    if not r:
        raise ValueError("zero remainder: inputs share a common factor")
    h = MPoly.constant(1)
    for c in q + r:
        if not c.is_zero:
            h = lcm_yz(h, c.den)
    q_rows = [c.num * h.exact_div(c.den) if not c.is_zero else MPoly.zero() for c in q]
    r_rows = [c.num * h.exact_div(c.den) if not c.is_zero else MPoly.zero() for c in r]
    return (
        HPoly(h),
        HPoly(MPoly.from_x_coefficients(q_rows)),
        HPoly(MPoly.from_x_coefficients(r_rows)),
    )


def x_content(a: HPoly) -> tuple[HPoly, HPoly]:
    """Split a = content * primitive with the content in Q[y, z].

    The content is the gcd of the x-coefficients, normalized to leading
    coefficient 1; the primitive part keeps the input's unit.
    """
    rows = a.poly.x_coefficients()
    cont = MPoly.zero()
    for row in rows:
        if not row.is_zero:
            cont = gcd_yz(cont, row)
            if cont.total_degree == 0:
                break
    content = HPoly(cont)
    return content, a.exact_div(content)


def substitute_line(c: HPoly, beta, field) -> tuple[int, UPoly]:
    """Restrict a curve to the pencil line y = beta*z (z set to 1).

    Returns (e0, f) with C(x, beta*z, z) = z^e0 * homogenization(f) over
    the field of beta.  A zero restriction means the curve contains the
    line, which violates the caller's coprimality precondition.
    """
    f = c.poly.upoly_in(X, {Y: field.convert(beta), Z: field.one}, field)
    if f.is_zero:
        raise ValueError("curve vanishes on the whole line: inputs share a factor")
    return c.degree - f.degree, f


def resultant_x(a: HPoly, b: HPoly) -> HPoly | None:
    """Resultant eliminating x, as a binary form in (y, z).

    Returns None exactly when the resultant vanishes, i.e. when the inputs
    share a factor of positive x-degree.
    """
    from .resultants import MPOLY_RING, resultant

    if a.x_degree < 1 or b.x_degree < 1:
        raise ValueError("both inputs must have positive x-degree")
    res = resultant(a.poly.x_coefficients(), b.poly.x_coefficients(), MPOLY_RING)
    if res.is_zero:
        return None
    return HPoly(res)
