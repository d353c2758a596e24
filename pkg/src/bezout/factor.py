"""Irreducible factorization over Q and over number fields.

Over Q: squarefree decomposition (Yun), then classical Zassenhaus on the
primitive integer part -- distinct-degree plus equal-degree splitting modulo
a suitable prime, quadratic Hensel lifting up to the Mignotte bound, and
subset recombination.  Over Q(b): Trager's norm method on top of the
rational engine.  Every choice (primes, splitting candidates, shifts) is
enumerated deterministically, so results are reproducible; every returned
factorization is re-expanded and compared against the input before it is
handed back.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .numberfield import NFElem, NumberField, QQ
from .resultants import resultant, upoly_ring
from .upoly import UPoly, from_int_coeffs, gcd_monic, poly_gcd, to_int_coeffs


@dataclass(frozen=True)
class Factorization:
    """unit * product(factor^multiplicity), factors monic irreducible."""

    unit: object
    factors: tuple[tuple[UPoly, int], ...]

    def expand(self) -> UPoly:
        if self.factors:
            domain = self.factors[0][0].domain
        elif isinstance(self.unit, NFElem):
            domain = self.unit.field
        else:
            domain = QQ
        acc = UPoly.constant(domain, domain.convert(self.unit))
        for f, m in self.factors:
            acc = acc * f**m
        return acc

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _coeff_key(c):
    if isinstance(c, NFElem):
        return c.coeffs
    return c


def upoly_sort_key(f: UPoly):
    return (f.degree, tuple(_coeff_key(c) for c in reversed(f.coeffs)))


def _sorted_factors(factors):
    return tuple(sorted(factors, key=lambda fm: (upoly_sort_key(fm[0]), fm[1])))


# ---------------------------------------------------------------------
# squarefree decomposition (Yun, characteristic 0)
# ---------------------------------------------------------------------


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Pairwise-coprime squarefree monic parts with product f/lc.

    Standard Yun recurrence; valid over any characteristic-0 field.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree < 1:
        return []
    fm = f.monic()
    deriv = fm.derivative()
    a = poly_gcd(fm, deriv)
    if a.degree < 1:
        return [(fm, 1)]
    b = fm.exact_div(a)
    c = deriv.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------
# GF(p) univariate arithmetic (dense int lists, low to high)
# ---------------------------------------------------------------------


def _gf_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_add(f, g, p):
    n = max(len(f), len(g))
    return _gf_trim(
        [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)]
    )


def _gf_sub(f, g, p):
    n = max(len(f), len(g))
    return _gf_trim(
        [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    )


def _gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gf_trim(out)


def _gf_monic(f, p):
    inv = pow(f[-1], p - 2, p)
    return [(c * inv) % p for c in f]


def _gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError
    inv = pow(g[-1], p - 2, p)
    rem = list(f)
    dq = len(rem) - len(g)
    if dq < 0:
        return [], rem
    quo = [0] * (dq + 1)
    dg = len(g) - 1
    for i in range(dq, -1, -1):
        c = (rem[i + dg] * inv) % p
        quo[i] = c
        if c:
            for j in range(dg + 1):
                rem[i + j] = (rem[i + j] - c * g[j]) % p
    return _gf_trim(quo), _gf_trim(rem[:dg])


def _gf_gcd(f, g, p):
    while g:
        f, g = g, _gf_divmod(f, g, p)[1]
    return _gf_monic(f, p) if f else []


def _gf_gcdex(f, g, p):
    """(d, s, t) with s*f + t*g = d (monic gcd)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return (
        _gf_monic(r0, p),
        _gf_trim([(c * inv) % p for c in s0]),
        _gf_trim([(c * inv) % p for c in t0]),
    )


def _gf_pow_mod(f, n, mod, p):
    result = [1]
    base = _gf_divmod(f, mod, p)[1]
    while n:
        if n & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        n >>= 1
    return result


def _gf_distinct_degree(f, p):
    """Distinct-degree split of a monic squarefree f: list of (product, d)."""
    out = []
    h = [0, 1]
    rest = list(f)
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_pow_mod(h, p, rest, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest = _gf_divmod(rest, g, p)[0]
            h = _gf_divmod(h, rest, p)[1]
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _gf_split_candidates(p):
    """Deterministic stream of monic test polynomials of growing degree."""
    for deg in itertools.count(1):
        for tail in itertools.product(range(p), repeat=deg):
            yield list(tail) + [1]


def _gf_equal_degree(f, d, p):
    """Split a product of degree-d irreducibles (Cantor-Zassenhaus, odd p)."""
    n = len(f) - 1
    if n == d:
        return [f]
    m = (p**d - 1) // 2
    for u in _gf_split_candidates(p):
        g = _gf_gcd(_gf_sub(_gf_pow_mod(u, m, f, p), [1], p), f, p)
        if 1 < len(g) < len(f):
            rest = _gf_divmod(f, g, p)[0]
            return _gf_equal_degree(g, d, p) + _gf_equal_degree(rest, d, p)
    raise RuntimeError("equal-degree splitting exhausted its candidates")


def _gf_factor_squarefree(f, p):
    """Monic irreducible factors of a monic squarefree f mod p."""
    out = []
    for block, d in _gf_distinct_degree(f, p):
        out.extend(_gf_equal_degree(block, d, p))
    out.sort(key=lambda g: (len(g), list(reversed(g))))
    return out


# ---------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------


def _zm_trim(f, m):
    f = [c % m for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _zm_mul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    return _zm_trim(out, m)


def _zm_add(f, g, m):
    n = max(len(f), len(g))
    return _zm_trim(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], m
    )


def _zm_sub(f, g, m):
    n = max(len(f), len(g))
    return _zm_trim(
        [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], m
    )


def _zm_divmod_monic(f, g, m):
    """Division by a monic polynomial; valid over Z/m for any m."""
    rem = [c % m for c in f]
    dq = len(rem) - len(g)
    if dq < 0:
        return [], _zm_trim(rem, m)
    quo = [0] * (dq + 1)
    dg = len(g) - 1
    for i in range(dq, -1, -1):
        c = rem[i + dg] % m
        quo[i] = c
        if c:
            for j in range(dg + 1):
                rem[i + j] = (rem[i + j] - c * g[j]) % m
    return _zm_trim(quo, m), _zm_trim(rem[:dg], m)


def _hensel_step(f, g, h, s, t, m2):
    """One quadratic lift: from a factorization mod m to one mod m2 = m^2."""
    e = _zm_sub(f, _zm_mul(g, h, m2), m2)
    q, r = _zm_divmod_monic(_zm_mul(s, e, m2), h, m2)
    g1 = _zm_add(_zm_add(g, _zm_mul(t, e, m2), m2), _zm_mul(q, g, m2), m2)
    h1 = _zm_add(h, r, m2)
    b = _zm_sub(_zm_add(_zm_mul(s, g1, m2), _zm_mul(t, h1, m2), m2), [1], m2)
    c, d = _zm_divmod_monic(_zm_mul(s, b, m2), h1, m2)
    s1 = _zm_sub(s, d, m2)
    t1 = _zm_sub(_zm_sub(t, _zm_mul(t, b, m2), m2), _zm_mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _hensel_lift(f, facs, p, target_exp):
    """Lift monic mod-p factors of f/lc(f) to monic factors mod p^target_exp.

    Uses a two-way factor-tree split; lc(f) must be invertible mod p and the
    mod-p factorization squarefree.
    """
    q = p**target_exp
    if len(facs) == 1:
        inv = pow(f[-1] % q, -1, q)
        return [_zm_trim([c * inv for c in f], q)]
    mid = len(facs) // 2
    g0 = [f[-1] % p]
    for fac in facs[:mid]:
        g0 = _gf_mul(g0, fac, p)
    h0 = [1]
    for fac in facs[mid:]:
        h0 = _gf_mul(h0, fac, p)
    d, s, t = _gf_gcdex(g0, h0, p)
    if d != [1]:
        raise RuntimeError("mod-p factors are not coprime")
    # enforce deg s < deg h0, deg t < deg g0
    qq, s = _gf_divmod(s, h0, p)
    t = _gf_add(t, _gf_mul(qq, g0, p), p)
    g, h = g0, h0
    m = p
    exp = 1
    fq = [c % q for c in f]
    while exp < target_exp:
        m2 = m * m
        g, h, s, t = _hensel_step([c % m2 for c in f], g, h, s, t, m2)
        m = m2
        exp *= 2
    g = _zm_trim(g, q)
    h = _zm_trim(h, q)
    assert _zm_sub(fq, _zm_mul(g, h, q), q) == [], "Hensel lift lost the product"
    return _hensel_lift(g, facs[:mid], p, target_exp) + _hensel_lift(h, facs[mid:], p, target_exp)


# ---------------------------------------------------------------------
# integer polynomial helpers
# ---------------------------------------------------------------------


def _int_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _int_primitive(f):
    cont = 0
    for c in f:
        cont = math.gcd(cont, c)
    if f[-1] < 0:
        cont = -cont
    return [c // cont for c in f]


def _int_exact_div(f, g):
    """Quotient f/g in Z[x], or None when g does not divide f there."""
    rem = list(f)
    dg = len(g) - 1
    dq = len(rem) - len(g)
    if dq < 0:
        return None
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        top = rem[i + dg]
        if top % g[-1]:
            return None
        c = top // g[-1]
        quo[i] = c
        if c:
            for j in range(dg + 1):
                rem[i + j] -= c * g[j]
    if any(rem):
        return None
    return quo


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def _choose_prime(f):
    """Smallest usable prime > 2*deg: keeps the degree and stays squarefree."""
    n = len(f) - 1
    p = 2 * n + 1
    while True:
        if _is_prime(p) and f[-1] % p:
            fbar = _gf_trim([c % p for c in f])
            dbar = _gf_trim([(i * c) % p for i, c in enumerate(f)][1:])
            if dbar and len(_gf_gcd(fbar, dbar, p)) == 1:
                return p
        p += 1


def _factor_squarefree_int(f):
    """Irreducible factors in Z[x] of a primitive squarefree f, lc > 0."""
    n = len(f) - 1
    if n == 1:
        return [f]
    p = _choose_prime(f)
    fbar = _gf_monic([c % p for c in f], p)
    modular = _gf_factor_squarefree(fbar, p)
    if len(modular) == 1:
        return [f]
    # Mignotte-style bound on coefficients of any factor, times lc
    max_norm = max(abs(c) for c in f)
    bound = (math.isqrt(n + 1) + 1) * (1 << n) * max_norm * abs(f[-1])
    target_exp = 1
    q = p
    while q <= 2 * bound:
        q *= p
        target_exp += 1
    lifted = _hensel_lift(f, modular, p, target_exp)
    q = p**target_exp

    def sym(c):
        c %= q
        return c - q if c > q // 2 else c

    result = []
    rest = list(f)
    alive = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(alive):
        found = False
        for combo in itertools.combinations(alive, size):
            cand = [rest[-1] % q]
            for i in combo:
                cand = _zm_mul(cand, lifted[i], q)
            cand = _int_primitive([sym(c) for c in cand])
            quo = _int_exact_div(rest, cand)
            if quo is not None:
                result.append(cand)
                rest = _int_primitive(quo)
                alive = [i for i in alive if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if len(rest) > 1:
        result.append(rest)
    return result


# ---------------------------------------------------------------------
# public factorizations
# ---------------------------------------------------------------------


def _factor_squarefree_monic_q(f: UPoly) -> list[UPoly]:
    ints, _ = to_int_coeffs(f)
    parts = _factor_squarefree_int(ints)
    out = [from_int_coeffs(QQ, part).monic() for part in parts]
    out.sort(key=upoly_sort_key)
    return out


def factor_q(f: UPoly) -> Factorization:
    """Complete irreducible factorization over Q."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.domain != QQ:
        raise ValueError("factor_q expects rational coefficients")
    if f.degree == 0:
        return Factorization(f.coeffs[0], ())
    factors = []
    for part, mult in squarefree_decomposition(f):
        for irr in _factor_squarefree_monic_q(part):
            factors.append((irr, mult))
    result = Factorization(f.lc, _sorted_factors(factors))
    assert result.expand() == f, "factorization does not re-expand to its input"
    return result


def is_irreducible_q(f: UPoly) -> bool:
    if f.degree < 1:
        return False
    fac = factor_q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def _norm_from_modulus(field: NumberField, f: UPoly) -> UPoly:
    """Res_t(g(t), f(x, t)) where f's coefficients are written as polys in t."""
    g = field.modulus
    a_rows = [UPoly.constant(QQ, c) for c in g.coeffs]
    t_deg = max((len(c.coeffs) for c in f.coeffs), default=0)
    b_rows = []
    for j in range(t_deg):
        b_rows.append(
            UPoly(QQ, [c.coeffs[j] if j < len(c.coeffs) else 0 for c in f.coeffs])
        )
    res = resultant(a_rows, b_rows, upoly_ring(QQ))
    return res


def factor_nf(f: UPoly) -> Factorization:
    """Complete irreducible factorization over a number field (Trager).

    For each squarefree part, shift by an integer multiple of the generator
    until the norm is squarefree, factor the norm over Q, and recover the
    factors by gcds back in the extension.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    field = f.domain
    if not isinstance(field, NumberField):
        raise ValueError("factor_nf expects number-field coefficients")
    if f.degree == 0:
        return Factorization(f.coeffs[0], ())
    if field.degree == 1:
        # the field is Q in disguise: delegate and lift back
        rat = f.map_coeffs(QQ, lambda c: c.as_fraction())
        inner = factor_q(rat)
        factors = tuple(
            (g.map_coeffs(field, field.convert), m) for g, m in inner.factors
        )
        result = Factorization(field.convert(inner.unit), factors)
        assert result.expand() == f
        return result

    gen = field.gen()
    factors = []
    for part, mult in squarefree_decomposition(f):
        if part.degree == 1:
            factors.append((part, mult))
            continue
        shifted = None
        shift_amount = 0
        for s in _shift_candidates():
            cand = part.compose(UPoly(field, (-s * gen, field.one)))
            norm = _norm_from_modulus(field, cand)
            if norm.degree != field.degree * part.degree:
                continue
            deriv = norm.derivative()
            if poly_gcd(norm, deriv).degree == 0:
                shifted = cand
                shift_amount = s
                norm_sqf = norm
                break
        if shifted is None:
            raise RuntimeError("no squarefree norm found (shift search exhausted)")
        norm_factors = factor_q(norm_sqf)
        recovered = []
        for nf_factor, nf_mult in norm_factors.factors:
            if nf_mult != 1:
                raise RuntimeError("squarefree norm factored with multiplicity")
            lifted = nf_factor.map_coeffs(field, field.convert)
            h = gcd_monic(shifted, lifted)
            if h.degree < 1:
                raise RuntimeError("norm factor shares nothing with the input")
            recovered.append(h.compose(UPoly(field, (shift_amount * gen, field.one))))
        assert sum(h.degree for h in recovered) == part.degree
        for h in recovered:
            factors.append((h.monic(), mult))
    result = Factorization(f.lc, _sorted_factors(factors))
    assert result.expand() == f, "factorization does not re-expand to its input"
    return result


def _shift_candidates():
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k
        if k > 50:
            raise RuntimeError("shift search exhausted")


def factor_field(f: UPoly) -> Factorization:
    """Dispatch on the coefficient domain."""
    if isinstance(f.domain, NumberField):
        return factor_nf(f)
    return factor_q(f)


def factor_binary_form(c, u: int, v: int):
    """Factor a binary form as v^e times the homogenization of a factored
    univariate polynomial; returns (e, Factorization of c(u, 1))."""
    from .mpoly import bform_to_upoly

    e, f = bform_to_upoly(c.poly, u, v)
    if f.degree < 0:
        raise ValueError("zero binary form")
    if f.degree == 0:
        return e, Factorization(f.coeffs[0], ())
    return e, factor_q(f)
