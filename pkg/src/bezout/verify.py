"""Independent checks on computed cycles.

The resultant oracle never touches the Euclid recursion: it shears the pair
into general position, eliminates x with a Sylvester-style resultant, and
compares that factorization against the projection of the recomputed cycle.
A disagreement means one of the two independent paths is wrong.

The property harness replays the algebraic identities the algorithm relies
on (symmetry, additivity over products, invariance under adding a multiple
of the other curve, scalar invariance) on seeded random coprime pairs, plus
exact on-curve membership and the single-point law for line pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cycles import C0, PINF, Cycle, GaloisCycle
from .factor import factor_binary_form
from .intersect import (
    CommonComponentError,
    Line,
    intersection_cycle,
    line_point,
    point_cycle,
)
from .mpoly import HPoly, MPoly, X, Y, Z, gcd_homogeneous, resultant_x
from .numberfield import NumberField, QQ
from .upoly import UPoly


def bezout_holds(cycle: Cycle, m: int, n: int) -> bool:
    """True when the cycle counts exactly m*n points with multiplicity."""
    if not cycle.all_positive:
        raise ValueError("count is undefined for cycles with negative coefficients")
    return cycle.size == m * n


def on_curve(a: HPoly, gc: GaloisCycle) -> bool:
    """Exact symbolic membership of every point of a Galois cycle on a curve."""
    if gc.kind == PINF:
        return a.poly.terms.get((a.degree, 0, 0)) is None
    if gc.kind == C0:
        u = a.poly.upoly_in(X, {Y: QQ.one, Z: QQ.zero}, QQ)
        return (u % gc.f).is_zero
    field = NumberField.unchecked(gc.g)
    v = a.poly.upoly_in(X, {Y: field.gen(), Z: field.one}, field)
    return (v % gc.h).is_zero


# ---------------------------------------------------------------------
# the resultant projection oracle
# ---------------------------------------------------------------------


@dataclass
class OracleReport:
    verdict: str  # "pass" | "fail" | "inconclusive"
    sheared: bool
    matrix: tuple[tuple[int, int, int], ...]
    resultant_factors: list[tuple[str, int]]
    cycle_projection: list[tuple[str, int]]
    mismatch: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "sheared": self.sheared,
            "matrix": [list(row) for row in self.matrix],
            "resultant_factors": [[t, m] for t, m in self.resultant_factors],
            "cycle_projection": [[t, m] for t, m in self.cycle_projection],
            "mismatch": self.mismatch,
        }


_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _apply_matrix(p: HPoly, matrix) -> HPoly:
    images = [
        MPoly(
            {
                (1, 0, 0): matrix[r][0],
                (0, 1, 0): matrix[r][1],
                (0, 0, 1): matrix[r][2],
            }
        )
        for r in range(3)
    ]
    return HPoly(p.poly.subst_linear(images))


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _good_position(p: HPoly) -> bool:
    # full x-degree, equivalently nonzero at (1,0,0)
    return p.poly.terms.get((p.degree, 0, 0)) is not None


def resultant_oracle(a: HPoly, b: HPoly, seed: int = 0) -> OracleReport:
    """Compare the resultant's factorization with the cycle's line projection.

    After a coordinate change that moves both curves into general position
    (full x-degree), Res_x factors over Q[y,z]; each line through (1,0,0)
    must appear with multiplicity equal to the summed point count of the
    cycle entries sitting on it.
    """
    rng = random.Random(seed)
    matrix = _IDENTITY
    at, bt = a, b
    attempts = 0
    while not (_good_position(at) and _good_position(bt)):
        attempts += 1
        if attempts > 32:
            return OracleReport("inconclusive", True, matrix, [], [],
                                mismatch="no usable shear found in 32 draws")
        matrix = tuple(
            tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(3)
        )
        if _det3(matrix) == 0:
            continue
        at = _apply_matrix(a, matrix)
        bt = _apply_matrix(b, matrix)
    sheared = matrix != _IDENTITY

    res = resultant_x(at, bt)
    if res is None:
        return OracleReport("fail", sheared, matrix, [], [],
                            mismatch="resultant vanished for a coprime pair")
    e_z, fac = factor_binary_form(res, Y, Z)
    res_factors: dict[tuple, int] = {}
    if e_z:
        res_factors[("z",)] = e_z
    for g, mult in fac.factors:
        res_factors[g.coeffs] = res_factors.get(g.coeffs, 0) + mult

    cycle = intersection_cycle(at, bt)
    projected: dict[tuple, int] = {}
    pinf_term = 0
    for gc, k in cycle.sorted_entries():
        if gc.kind == PINF:
            pinf_term += k
        elif gc.kind == C0:
            projected[("z",)] = projected.get(("z",), 0) + k * gc.f.degree
        else:
            key = gc.g.coeffs
            projected[key] = projected.get(key, 0) + k * gc.h.degree

    def _texts(d):
        out = []
        for key, mult in d.items():
            text = "z" if key == ("z",) else UPoly(QQ, key).text("y")
            out.append((text, mult))
        return sorted(out)

    report = OracleReport(
        "pass", sheared, matrix, _texts(res_factors), _texts(projected)
    )
    if pinf_term:
        report.verdict = "fail"
        report.mismatch = "(1,0,0) still on both curves after the coordinate change"
    elif res_factors != projected:
        report.verdict = "fail"
        report.mismatch = "resultant factors do not match the cycle projection"
    elif res.degree != a.degree * b.degree:
        report.verdict = "fail"
        report.mismatch = (
            f"resultant degree {res.degree} != {a.degree * b.degree}"
        )
    return report


# ---------------------------------------------------------------------
# seeded random inputs
# ---------------------------------------------------------------------


def random_hpoly(rng: random.Random, degree: int, coeff_bound: int = 3) -> HPoly:
    """Random homogeneous polynomial of exact total degree."""
    while True:
        terms = {}
        for i in range(degree + 1):
            for j in range(degree + 1 - i):
                c = rng.randint(-coeff_bound, coeff_bound)
                if c:
                    terms[(i, j, degree - i - j)] = c
        if terms:
            return HPoly(MPoly(terms))


def random_coprime_pair(
    rng: random.Random, max_degree: int, min_degree: int = 1
) -> tuple[HPoly, HPoly]:
    while True:
        da = rng.randint(min_degree, max_degree)
        db = rng.randint(min_degree, max_degree)
        a = random_hpoly(rng, da)
        b = random_hpoly(rng, db)
        if gcd_homogeneous(a, b).degree == 0:
            return a, b


def random_line(rng: random.Random) -> Line:
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(3)]
        if any(coeffs):
            return Line(*[QQ.convert(c) for c in coeffs])


def _line_hpoly(line: Line) -> HPoly:
    return HPoly(
        MPoly({(1, 0, 0): line.a1, (0, 1, 0): line.a2, (0, 0, 1): line.a3})
    )


# ---------------------------------------------------------------------
# the property harness
# ---------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    trials: int
    passed: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


@dataclass
class HarnessReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"all_passed": self.all_passed, "checks": [c.to_json() for c in self.checks]}

    def text(self) -> str:
        lines = []
        for c in self.checks:
            status = "OK" if c.ok else f"FAIL ({c.counterexample})"
            lines.append(f"{c.name}: {c.passed}/{c.trials} {status}")
        return "\n".join(lines)


def _run_check(name: str, trials: int, body) -> CheckResult:
    result = CheckResult(name, trials, 0)
    for t in range(trials):
        note = body(t)
        if note is None:
            result.passed += 1
        elif result.counterexample is None:
            result.counterexample = note
    return result


def property_harness(trials: int, max_degree: int, seed: int = 0) -> HarnessReport:
    """Replay the cycle identities on seeded random inputs."""
    report = HarnessReport()

    def symmetry(t):
        rng = random.Random((seed, "sym", t).__str__())
        a, b = random_coprime_pair(rng, max_degree)
        if intersection_cycle(a, b) == intersection_cycle(b, a):
            return None
        return f"A={a}, B={b}"

    def additivity(t):
        rng = random.Random((seed, "add", t).__str__())
        while True:
            a = random_hpoly(rng, rng.randint(1, max_degree))
            b = random_hpoly(rng, rng.randint(1, max_degree))
            c = random_hpoly(rng, rng.randint(1, max_degree))
            if (
                gcd_homogeneous(a, b).degree == 0
                and gcd_homogeneous(a, c).degree == 0
            ):
                break
        lhs = intersection_cycle(a, b * c)
        rhs = intersection_cycle(a, b) + intersection_cycle(a, c)
        if lhs == rhs:
            return None
        return f"A={a}, B={b}, C={c}"

    def shift(t):
        rng = random.Random((seed, "shift", t).__str__())
        while True:
            a = random_hpoly(rng, rng.randint(1, max_degree))
            c = random_hpoly(rng, rng.randint(1, max_degree))
            b = random_hpoly(rng, a.degree + c.degree)
            if gcd_homogeneous(a, b).degree > 0:
                continue
            shifted_poly = b.poly + a.poly * c.poly
            if shifted_poly.is_zero:
                continue
            shifted = HPoly(shifted_poly)
            break
        if intersection_cycle(a, shifted) == intersection_cycle(a, b):
            return None
        return f"A={a}, B={b}, C={c}"

    def scalar(t):
        rng = random.Random((seed, "scalar", t).__str__())
        a, b = random_coprime_pair(rng, max_degree)
        lam = QQ.convert(rng.choice([c for c in range(-7, 8) if c]))
        mu = QQ.convert(rng.choice([c for c in range(-7, 8) if c]))
        if intersection_cycle(a * lam, b * mu) == intersection_cycle(a, b):
            return None
        return f"A={a}, B={b}, lam={lam}, mu={mu}"

    def bezout(t):
        rng = random.Random((seed, "bezout", t).__str__())
        a, b = random_coprime_pair(rng, max_degree)
        cycle = intersection_cycle(a, b)
        if bezout_holds(cycle, a.degree, b.degree) and cycle.all_positive:
            return None
        return f"A={a}, B={b}"

    def membership(t):
        rng = random.Random((seed, "member", t).__str__())
        a, b = random_coprime_pair(rng, max_degree)
        cycle = intersection_cycle(a, b)
        for gc, _ in cycle.sorted_entries():
            if not (on_curve(a, gc) and on_curve(b, gc)):
                return f"A={a}, B={b}, cycle={gc.text()}"
        return None

    def lines(t):
        rng = random.Random((seed, "lines", t).__str__())
        while True:
            l1, l2 = random_line(rng), random_line(rng)
            try:
                p = line_point(l1, l2)
            except CommonComponentError:
                continue
            break
        if l1.evaluate(p) or l2.evaluate(p):
            return f"L1={l1}, L2={l2}: point not on both lines"
        cycle = intersection_cycle(_line_hpoly(l1), _line_hpoly(l2))
        if cycle == Cycle.of(point_cycle(p), 1):
            return None
        return f"L1={l1}, L2={l2}: cycle {cycle.text()}"

    report.checks.append(_run_check("symmetry", trials, symmetry))
    report.checks.append(_run_check("additivity", trials, additivity))
    report.checks.append(_run_check("shift_invariance", trials, shift))
    report.checks.append(_run_check("scalar_invariance", trials, scalar))
    report.checks.append(_run_check("bezout_count", trials, bezout))
    report.checks.append(_run_check("membership", trials, membership))
    report.checks.append(_run_check("line_pairs", trials, lines))
    return report
