"""Unpacking Galois cycles into approximate complex points.

Roots are located by Aberth-Ehrlich simultaneous iteration on mpmath
complex numbers, started on a slightly perturbed circle of Cauchy-bound
radius.  Nested data (the inner polynomial of a double-sum cycle) is
specialized at each refined outer root before its own roots are found, and
the quality of every emitted point is tracked through curve residuals
rather than certified intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cycles import C0, PINF, Cycle
from .factor import squarefree_decomposition
from .mpoly import HPoly
from .numberfield import QQ
from .upoly import UPoly

DEFAULT_PRECISION = 30
_MAX_ITERATIONS = 200


class RootFindingError(RuntimeError):
    """Iteration failed to converge; try a higher precision."""


@dataclass(frozen=True)
class ApproxPoint:
    """Projective point with the last nonzero coordinate normalized to 1."""

    x: object  # mpmath.mpc
    y: object
    z: int  # 0 or 1
    mult: int
    residual_a: float | None = None
    residual_b: float | None = None

    def coords(self):
        return (self.x, self.y, mpmath.mpc(self.z))


def _to_mpc(c) -> "mpmath.mpc":
    if isinstance(c, Fraction):
        return mpmath.mpc(mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator))
    return mpmath.mpc(c)


def _aberth(coeffs: list, precision: int) -> list:
    """All roots of a squarefree polynomial given by mpc coefficients."""
    n = len(coeffs) - 1
    if n < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if n == 1:
        return [-monic[0]]
    deriv = [i * c for i, c in enumerate(monic)][1:]

    def ev(cs, v):
        acc = mpmath.mpc(0)
        for c in reversed(cs):
            acc = acc * v + c
        return acc

    radius = 1 + max(abs(c) for c in monic[:-1])
    roots = [
        radius * mpmath.exp(2j * mpmath.pi * (k / n) + 0.4j) * (1 + mpmath.mpf(k) / (7 * n))
        for k in range(n)
    ]
    tol = mpmath.mpf(10) ** (-(precision + 5))
    for _ in range(_MAX_ITERATIONS):
        biggest = mpmath.mpf(0)
        new_roots = list(roots)
        for k in range(n):
            zk = roots[k]
            fz = ev(monic, zk)
            dfz = ev(deriv, zk)
            if dfz == 0:
                new_roots[k] = zk + tol + mpmath.mpf("0.1")
                biggest = max(biggest, mpmath.mpf(1))
                continue
            w = fz / dfz
            s = mpmath.mpc(0)
            for j in range(n):
                if j != k:
                    s += 1 / (zk - roots[j])
            denom = 1 - w * s
            correction = w if denom == 0 else w / denom
            new_roots[k] = zk - correction
            scale = max(mpmath.mpf(1), abs(zk))
            biggest = max(biggest, abs(correction) / scale)
        roots = new_roots
        if biggest < tol:
            return roots
    raise RootFindingError(
        f"root iteration did not converge in {_MAX_ITERATIONS} steps; "
        f"retry with a higher precision"
    )


def _roots_numeric(coeffs: list, precision: int) -> list:
    """Aberth with one automatic precision-doubling retry."""
    with mpmath.workdps(precision + 15):
        try:
            return _aberth(coeffs, precision)
        except RootFindingError:
            pass
    with mpmath.workdps(2 * precision + 15):
        return _aberth(coeffs, 2 * precision)


def _root_sort_key(r):
    return (float(mpmath.arg(r)), float(abs(r)))


def complex_roots(f: UPoly, precision: int = DEFAULT_PRECISION) -> list:
    """Roots of a rational polynomial, repeated with their multiplicities.

    The squarefree decomposition supplies multiplicities, so the iteration
    itself only ever sees simple roots.
    """
    if f.degree < 1:
        raise ValueError("the polynomial must be nonconstant")
    if f.domain != QQ:
        raise ValueError("complex_roots expects rational coefficients")
    out = []
    with mpmath.workdps(precision + 15):
        for part, mult in squarefree_decomposition(f):
            coeffs = [_to_mpc(c) for c in part.coeffs]
            roots = _roots_numeric(coeffs, precision)
            roots.sort(key=_root_sort_key)
            for r in roots:
                out.extend([r] * mult)
    return out


def _specialize(h: UPoly, beta) -> list:
    """Evaluate number-field coefficients of h at a numeric root beta."""
    out = []
    for c in h.coeffs:
        acc = mpmath.mpc(0)
        for a in reversed(c.coeffs):
            acc = acc * beta + _to_mpc(a)
        out.append(acc)
    return out


def unpack(
    cycle: Cycle,
    precision: int = DEFAULT_PRECISION,
    curves: tuple[HPoly, HPoly] | None = None,
) -> list[ApproxPoint]:
    """Expand a positive cycle into its list of approximate points.

    Output order is deterministic: canonical cycle order, then root angle
    and magnitude.  When the two curves are supplied, each point carries
    residuals |A(P)| and |B(P)| evaluated after scaling each curve to unit
    max coefficient.
    """
    if not cycle.all_positive:
        raise ValueError("only positive cycles can be unpacked")
    norm_a = norm_b = None
    if curves is not None:
        norm_a = _normalized_terms(curves[0])
        norm_b = _normalized_terms(curves[1])
    points: list[ApproxPoint] = []
    with mpmath.workdps(precision + 15):
        for gc, mult in cycle.sorted_entries():
            if gc.kind == PINF:
                points.append(_finish(1, 0, 0, mult, norm_a, norm_b))
            elif gc.kind == C0:
                for alpha in _unique_roots(gc.f, precision):
                    points.append(_finish(alpha, 1, 0, mult, norm_a, norm_b))
            else:
                for beta in _unique_roots(gc.g, precision):
                    inner = _specialize(gc.h, beta)
                    gammas = _roots_numeric(inner, precision)
                    gammas.sort(key=_root_sort_key)
                    for gamma in gammas:
                        points.append(_finish(gamma, beta, 1, mult, norm_a, norm_b))
    total = sum(p.mult for p in points)
    if total != cycle.size:
        raise RootFindingError(
            f"unpacked {total} points but the cycle has size {cycle.size}"
        )
    return points


def _unique_roots(f: UPoly, precision: int) -> list:
    # data polynomials of canonical cycles are irreducible, hence squarefree
    coeffs = [_to_mpc(c) for c in f.coeffs]
    roots = _roots_numeric(coeffs, precision)
    roots.sort(key=_root_sort_key)
    return roots


def _normalized_terms(curve: HPoly):
    scale = max(abs(c) for c in curve.poly.terms.values())
    return [
        (e, _to_mpc(c / scale)) for e, c in sorted(curve.poly.terms.items())
    ]


def _eval_terms(terms, x, y, z):
    acc = mpmath.mpc(0)
    for (i, j, k), c in terms:
        acc += c * x**i * y**j * z**k
    return acc


def _finish(x, y, z, mult, norm_a, norm_b) -> ApproxPoint:
    xm, ym, zm = mpmath.mpc(x), mpmath.mpc(y), mpmath.mpc(z)
    ra = rb = None
    if norm_a is not None:
        ra = float(abs(_eval_terms(norm_a, xm, ym, zm)))
    if norm_b is not None:
        rb = float(abs(_eval_terms(norm_b, xm, ym, zm)))
    return ApproxPoint(xm, ym, int(z), mult, ra, rb)
