"""Acceptance checks shared by the test suite and ``weylgroupoid selftest``.

Each check returns a :class:`CheckResult`.  All arithmetic is exact, so every
comparison uses tolerance zero; random draws use fixed seeds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List

from . import linalg
from .groebner import (
    GREVLEX, LEX, Ideal, contains, eliminate, groebner_basis, power_membership,
    radical_contains, same_zero_set, zero_set_contains,
)
from .groupoid import (
    atyp, equivalent, maximal_isoset_at, orbit_description, sample_orbit_point,
)
from .invariants import (
    Setting, ev_map, power_sum, is_supersymmetric, is_w_invariant, random_invariant,
    supersymmetric_basis, t_polynomial,
)
from .poly import NotDivisible, Polynomial, Ring, Substitution, divide_exact, evaluate
from .rootdata import SuperType, build_root_system
from .sgeom import (
    ClosedSet, is_superalgebraic, orbit_closure_ideal, point_ideal, points_ideal,
    s_closure, symmetrize_report, tau_stability_failures, w_orbit_ideal, w_orbit_points,
)

SEED = 20240611


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    counts: Dict[str, int] = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name} -- {self.detail}"


# 1 -----------------------------------------------------------------------------

def criterion_1() -> CheckResult:
    S = Setting.of("gl", 1, 1)
    ring = S.ring
    s = ring.var("X1")
    u = ring.parse("X1 + Y1")
    correct = total = 0
    wrong = []
    for a in range(5):
        for b in range(5 - a):
            f = s ** a * u ** b
            expected = b >= 1 or a == 0
            got = is_supersymmetric(f, S)
            total += 1
            if got == expected:
                correct += 1
            else:
                wrong.append(f"s^{a}u^{b}")
    passed = correct == total == 15
    return CheckResult(1, "gl(1|1) invariant ring = k + T S(h)", passed,
                       f"{correct}/{total} classifications correct" + (f"; wrong: {wrong}" if wrong else ""),
                       {"correct": correct, "total": total})


# 2 -----------------------------------------------------------------------------

DS_ROWS = [
    (SuperType("gl", 3, 2), None, SuperType("gl", 2, 1)),
    (SuperType("osp", 5, 4), None, SuperType("osp", 3, 2)),
    (SuperType("osp", 4, 2), None, SuperType("osp", 2, 0)),
    (SuperType("q", 0, 4), (2, 3), SuperType("q", 0, 2)),
    (SuperType("p", 0, 4), (2, 3), SuperType("p", 0, 2)),
]


def criterion_2() -> CheckResult:
    good, notes = 0, []
    for src, datum, expected in DS_ROWS:
        rs = build_root_system(src)
        beta = datum if datum is not None else rs.standard_chain()[0]
        red = rs.ds_reduction(beta)
        ok = red.matches_table and red.target == expected
        good += ok
        notes.append(f"{src}->{red.target.label() if red.target else None}:{'ok' if ok else 'MISMATCH'}")
    return CheckResult(2, "DS table rows", good == len(DS_ROWS), f"{good}/{len(DS_ROWS)} rows; " + ", ".join(notes),
                       {"rows": good})


# 3 -----------------------------------------------------------------------------

KERNEL_SETTINGS = [
    ("gl", 2, 1, "additive"),
    ("gl", 2, 2, "multiplicative"),
    ("q", 0, 3, "additive"),
    ("q", 0, 3, "multiplicative"),
    ("p", 0, 3, "multiplicative"),
]


def ev_kernel(setting: Setting, degree: int) -> List[Polynomial]:
    """Basis of {f supersymmetric, deg f <= degree, ev(f) = 0}."""
    basis = supersymmetric_basis(setting, degree)
    images = [ev_map(b, setting) for b in basis]
    monos = sorted({m for g in images for m in g.terms})
    rows = [[g.terms.get(m, Fraction(0)) for g in images] for m in monos]
    out = []
    for vec in linalg.nullspace(rows, len(basis)):
        f = setting.ring.zero()
        for c, b in zip(vec, basis):
            if c:
                f = f + b * c
        out.append(f)
    return out


def criterion_3(n_random: int = 20) -> CheckResult:
    rng = random.Random(SEED + 3)
    failures, checks = [], 0
    for fam, m, n, space in KERNEL_SETTINGS:
        S = Setting.of(fam, m, n, space)
        T = t_polynomial(S)
        for _ in range(n_random):
            g = random_invariant(S, 3, rng, density=0.3)
            checks += 1
            if not ev_map(T * g, S).is_zero():
                failures.append(f"{S}: ev(T g) != 0 for g = {g}")
        kernel = ev_kernel(S, 4)
        samples = list(kernel)
        for _ in range(5):
            combo = S.ring.zero()
            for f in kernel:
                combo = combo + f * rng.randint(-3, 3)
            samples.append(combo)
        for f in samples:
            checks += 1
            try:
                q = divide_exact(f, T)
            except NotDivisible:
                failures.append(f"{S}: T does not divide {f}")
                continue
            if not is_w_invariant(q, S):
                failures.append(f"{S}: quotient of {f} by T is not W-invariant")
    return CheckResult(3, "kernel of ev is T times invariants", not failures,
                       f"{checks - len(failures)}/{checks} checks" + (f"; first failure: {failures[0]}" if failures else ""),
                       {"checks": checks, "failures": len(failures)})


# 4 -----------------------------------------------------------------------------

PAIRING_TYPES = [SuperType("gl", 2, 2), SuperType("osp", 5, 2), SuperType("q", 0, 3), SuperType("p", 0, 3)]


def pairing_failures(rs) -> tuple:
    """Compare e^alpha(c_beta(t)) with t^(alpha, beta) symbolically."""
    tring = Ring(["t"], laurent=True)
    t = tring.var("t")
    src = rs.ring(True)
    checks, bad = 0, []
    if rs.is_km:
        pairs = [(a, b, a) for a in rs.roots for b in rs.roots]
    else:
        pairs = [(a, b, a) for a in rs.roots for b in rs.even_roots]
        pairs += [(a, b, rs.bar(a)) for a in rs.positive_even for b in rs.even_roots]
    for alpha, beta, char in pairs:
        c = rs.c_beta(beta)
        sub = Substitution(src, {k: t ** e for k, e in enumerate(c)}, tring)
        lhs = sub(rs.character(char, src))
        exp = rs.bilinear(char, beta)
        rhs = t ** int(exp)
        checks += 1
        if exp.denominator != 1 or lhs != rhs:
            bad.append((alpha, beta))
    return checks, bad


def criterion_4() -> CheckResult:
    total, bad = 0, []
    for st in PAIRING_TYPES:
        rs = build_root_system(st)
        c, b = pairing_failures(rs)
        total += c
        bad += [(st.label(), x) for x in b]
    return CheckResult(4, "pairing law e^a(c_b(t)) = t^(a,b)", not bad,
                       f"{total - len(bad)}/{total} root pairs exact",
                       {"pairs": total, "failures": len(bad)})


# 5 -----------------------------------------------------------------------------

def grid_points(space: str, count: int, rng) -> List[tuple]:
    if space == "additive":
        values = [Fraction(v) for v in (-2, -1, 0, 1, 2)]
    else:
        values = [Fraction(v) for v in (1, 2, -1)] + [Fraction(1, 2), Fraction(3)]
    pts = list(product(values, repeat=4))
    rng.shuffle(pts)
    return pts[:count]


def criterion_5(n_grid: int = 100, n_orbits: int = 20, n_samples: int = 20) -> CheckResult:
    rng = random.Random(SEED + 5)
    mismatches, grid_total = [], 0
    atypical: Dict[str, List[tuple]] = {}
    for space in ("additive", "multiplicative"):
        S = Setting.of("gl", 2, 2, space)
        for pt in grid_points(space, n_grid, rng):
            grid_total += 1
            F, _ = maximal_isoset_at(pt, S)
            a = atyp(pt, S)
            if len(F) != a:
                mismatches.append((space, pt))
            if a:
                atypical.setdefault(space, []).append(pt)
    orbit_fail, flagged, gens_checked, orbits = [], 0, 0, 0
    for space in ("additive", "multiplicative"):
        S = Setting.of("gl", 2, 2, space)
        pts = atypical.get(space, [])[:n_orbits]
        for pt in pts:
            orbits += 1
            I = orbit_closure_ideal(pt, S)
            desc = orbit_description(pt, S)
            samples = [sample_orbit_point(desc, rng) for _ in range(n_samples)]
            for g in I.generators:
                gens_checked += 1
                if evaluate(g, pt) != 0:
                    orbit_fail.append((space, pt, "nonzero at base", str(g)))
                if any(evaluate(g, p) != 0 for p in samples):
                    orbit_fail.append((space, pt, "nonzero on orbit", str(g)))
            flagged += sum(not r["supersymmetric"] for r in symmetrize_report(I, S))
    passed = not mismatches and not orbit_fail and orbits == 2 * n_orbits
    detail = (f"|F|=atyp on {grid_total - len(mismatches)}/{grid_total} grid points; "
              f"{orbits} orbit ideals, {gens_checked} generators vanish at base and {n_samples} orbit samples"
              f" ({len(orbit_fail)} failures); {flagged} generators flagged as not symmetrizable into A")
    return CheckResult(5, "orbit dimension and orbit closure ideals", passed, detail,
                       {"grid": grid_total, "mismatch": len(mismatches), "orbits": orbits,
                        "orbit_failures": len(orbit_fail), "flagged": flagged})


# 6 -----------------------------------------------------------------------------

def _shift_out(mu, setting: Setting):
    mu = list(mu)
    if setting.multiplicative:
        mu[0] = mu[0] * 2
    else:
        mu[0] = mu[0] + 1
    return tuple(mu)


def criterion_6(n_pairs: int = 50) -> CheckResult:
    rng = random.Random(SEED + 6)
    agree = total = 0
    value_checks, value_fail = 0, 0
    per_space = n_pairs // 2
    for space in ("additive", "multiplicative"):
        S = Setting.of("gl", 2, 2, space)
        basis = supersymmetric_basis(S, 3)
        p1 = power_sum(S, 1)
        assert is_supersymmetric(p1, S)
        pool = [p for p in grid_points(space, 400, rng) if atyp(p, S) >= 1]
        for k in range(per_space):
            lam = pool[k % len(pool)]
            mu = sample_orbit_point(orbit_description(lam, S), rng)
            truth = k % 2 == 0
            if not truth:
                mu = _shift_out(mu, S)
                assert evaluate(p1, mu) != evaluate(p1, lam)
            got = equivalent(lam, mu, S)
            total += 1
            agree += got == truth
            if got:
                for f in basis:
                    value_checks += 1
                    if evaluate(f, lam) != evaluate(f, mu):
                        value_fail += 1
    passed = agree == total == n_pairs and value_fail == 0
    return CheckResult(6, "equivalence matches construction", passed,
                       f"{agree}/{total} pairs agree; {value_checks - value_fail}/{value_checks} invariant evaluations equal",
                       {"agree": agree, "total": total, "value_failures": value_fail})


# 7 -----------------------------------------------------------------------------

def random_w_invariant_ideal(S: Setting, rng, degree: int = 2) -> Ideal:
    ring = S.ring
    polys = []
    for _ in range(rng.randint(1, 2)):
        terms = {}
        for m in product(range(degree + 1), repeat=ring.arity):
            if sum(m) <= degree and rng.random() < 0.4:
                c = rng.randint(-2, 2)
                if c:
                    terms[m] = c
        f = Polynomial(ring, terms)
        if not f.is_zero():
            polys.append(f)
    if not polys:
        polys = [ring.var(0) - ring.var(1)]
    return w_orbit_ideal(polys, S)


def criterion_7(n_random: int = 10) -> CheckResult:
    rng = random.Random(SEED + 7)
    notes, failures = [], []
    levels_checked = 0

    def check_levels(res, S):
        nonlocal levels_checked
        for q, I in enumerate(res.levels[1:], start=1):
            levels_checked += 1
            if tau_stability_failures(I, S):
                failures.append(f"tau-stability fails at level {q} in {S}")
        levels_checked += 1
        if tau_stability_failures(res.ideal, S):
            failures.append(f"tau-stability fails for the closure in {S}")

    # (a)
    G = Setting.of("gl", 1, 1)
    V = ClosedSet.from_ideal(point_ideal((1, -1), G), G)
    res = s_closure(V)
    line = Ideal(G.ring, [G.ring.parse("X1 + Y1")])
    a_ok = same_zero_set(res.ideal, line)
    check_levels(res, G)
    notes.append(f"(a) {'ok' if a_ok else 'FAIL'}")
    if not a_ok:
        failures.append(f"(a) closure is {res.ideal}")
    # (b)
    typical = [("gl", 1, 1, (1, 0)), ("gl", 2, 1, (3, 1, 1)), ("gl", 2, 2, (1, 2, 3, 5))]
    b_ok = True
    for fam, m, n, pt in typical:
        S = Setting.of(fam, m, n)
        I = points_ideal(w_orbit_points(pt, S), S)
        res = s_closure(ClosedSet.from_ideal(I, S))
        if res.atyp != 0 or not same_zero_set(res.ideal, I):
            b_ok = False
            failures.append(f"(b) typical orbit of {pt} in {S} moved")
    notes.append(f"(b) {'ok' if b_ok else 'FAIL'}")
    # (c)
    S = Setting.of("gl", 2, 1)
    c_good = 0
    for _ in range(n_random):
        I = random_w_invariant_ideal(S, rng)
        V = ClosedSet.from_ideal(I, S)
        if not V.w_invariant:
            failures.append(f"(c) generated ideal is not W-invariant: {I}")
            continue
        res = s_closure(V)
        check_levels(res, S)
        out = ClosedSet.from_ideal(res.ideal, S)
        again = s_closure(out)
        ok = (
            zero_set_contains(I, res.ideal)
            and same_zero_set(again.ideal, res.ideal)
            and is_superalgebraic(out)
        )
        c_good += ok
        if not ok:
            failures.append(f"(c) not idempotent for {I}")
    notes.append(f"(c) {c_good}/{n_random}")
    notes.append(f"(d) {levels_checked} level/closure ideals checked")
    return CheckResult(7, "S-closure", not failures, "; ".join(notes) + (f"; first failure: {failures[0]}" if failures else ""),
                       {"random_ok": c_good, "levels": levels_checked, "failures": len(failures)})


# 8 -----------------------------------------------------------------------------

def random_radical_pair(rng, ring: Ring):
    n = ring.arity

    def linear():
        while True:
            coeffs = [rng.randint(-2, 2) for _ in range(n)]
            if any(coeffs):
                break
        return sum((ring.var(k) * c for k, c in enumerate(coeffs)), ring.const(rng.randint(-1, 1)))

    l1, l2, l3 = linear(), linear(), linear()
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    I = Ideal(ring, [l1 ** a, l2 ** b])
    if rng.random() < 0.5:
        f = l1 * rng.randint(1, 2) + l2 * rng.randint(-2, 2)
    else:
        f = l3
    return f, I


def criterion_8(n_pairs: int = 30, n_shuffles: int = 10) -> CheckResult:
    rng = random.Random(SEED + 8)
    R = Ring(["X1", "X2", "X3"])
    cubic = Ideal(R, ["X1^2 - X2", "X1^3 - X3"])
    elim = eliminate(cubic, ["X1"], contract=True)
    target = elim.ring.parse("X2^3 - X3^2")
    tc_ok = [str(g) for g in elim.generators] == [str(target)]
    agree = 0
    for _ in range(n_pairs):
        f, I = random_radical_pair(rng, R)
        rab = radical_contains(I, f)
        power = power_membership(I, f, 6)
        agree += rab == (power is not None)
    shuffle_ok = True
    base = Ideal(R, ["X1^2*X2 - X3 + 1", "X2^2 - X1*X3", "X1*X2*X3 - 2*X2 + X3^2"])
    ref = groebner_basis(Ideal(R, base.generators), GREVLEX)
    for _ in range(n_shuffles):
        gens = list(base.generators)
        rng.shuffle(gens)
        gens = [g * rng.choice([1, -1, 2, Fraction(1, 3)]) for g in gens]
        if groebner_basis(Ideal(R, gens), GREVLEX) != ref:
            shuffle_ok = False
    passed = tc_ok and agree == n_pairs and shuffle_ok
    return CheckResult(8, "Groebner backend", passed,
                       f"twisted cubic {'ok' if tc_ok else 'FAIL'}; Rabinowitsch vs power search {agree}/{n_pairs}; "
                       f"GB uniqueness over {n_shuffles} shuffles {'ok' if shuffle_ok else 'FAIL'}",
                       {"agree": agree, "pairs": n_pairs})


CRITERIA: Dict[int, Callable[[], CheckResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
}


def run_all(selected=None) -> List[CheckResult]:
    keys = sorted(CRITERIA) if not selected else sorted(selected)
    return [CRITERIA[k]() for k in keys]
