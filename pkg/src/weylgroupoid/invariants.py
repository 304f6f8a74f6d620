"""Membership oracles for supersymmetric (Laurent) polynomials.

The additive setting uses the ring k[X, Y] of functions on h*; the
multiplicative setting uses the Laurent ring k[x^+-1, y^+-1] of functions on
the torus.  ``is_supersymmetric`` checks W-invariance and then one condition
per W-orbit on Omega.  ``supersymmetric_basis`` solves for the invariant
subspace of bounded degree by linear algebra, which gives an independent
route used for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .poly import (
    GroupElement, NotDivisible, Polynomial, Ring, Substitution, divide_exact,
    divides, random_polynomial, reynolds,
)
from .rootdata import RootSystem, SuperType, build_root_system

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


class UnsupportedSetting(ValueError):
    pass


class RankTooSmall(ValueError):
    pass


class Setting:
    """A root system together with a choice of space (h* or the torus)."""

    def __init__(self, rs: RootSystem | SuperType, space: str = ADDITIVE, *, experimental: bool = False):
        if isinstance(rs, SuperType):
            rs = build_root_system(rs)
        if space in ("torus", "T"):
            space = MULTIPLICATIVE
        if space not in (ADDITIVE, MULTIPLICATIVE):
            raise UnsupportedSetting(f"unknown space {space!r}")
        if rs.type.family == "p" and space == ADDITIVE and not experimental:
            raise UnsupportedSetting("p(n) on h* is not supported (the center has a unique prime)")
        self.rs = rs
        self.space = space
        self.experimental = experimental
        self.ring = rs.ring(self.multiplicative)
        self._actions = None

    @classmethod
    def of(cls, family: str, m: int = 0, n: int = 0, space: str = ADDITIVE, **kw) -> "Setting":
        return cls(build_root_system(family, m, n), space, **kw)

    @property
    def multiplicative(self) -> bool:
        return self.space == MULTIPLICATIVE

    @property
    def family(self) -> str:
        return self.rs.type.family

    def __repr__(self):
        return f"Setting({self.rs.type.label()}, {self.space})"

    def __eq__(self, other):
        return isinstance(other, Setting) and (self.rs.type, self.space) == (other.rs.type, other.space)

    def __hash__(self):
        return hash((self.rs.type, self.space))

    def action(self, w: GroupElement) -> GroupElement:
        return self.rs.polynomial_action(w, self.multiplicative)

    @property
    def generator_actions(self) -> List[GroupElement]:
        return [self.action(w) for w in self.rs.weyl_generators]

    @property
    def group_actions(self) -> List[GroupElement]:
        if self._actions is None:
            self._actions = [self.action(w) for w in self.rs.weyl_group]
        return self._actions

    def act_point(self, w: GroupElement, pt: Sequence) -> tuple:
        if self.multiplicative:
            return self.rs.act_torus(w, pt)
        return self.rs.act_weight(w, pt)

    def omega_representatives(self) -> List[tuple]:
        """One root per W-orbit on Omega (orbits taken up to sign)."""
        return [orbit[0] for orbit in omega_orbits(self.rs)]


def omega_orbits(rs: RootSystem) -> List[List[tuple]]:
    omega = list(rs.omega)
    index = {r: k for k, r in enumerate(omega)}
    parent = list(range(len(omega)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for k, r in enumerate(omega):
        for w in rs.weyl_generators:
            img = rs.act_weight(w, r)
            j = index.get(img, index.get(tuple(-x for x in img)))
            if j is not None:
                union(k, j)
    groups: Dict[int, List[tuple]] = {}
    for k, r in enumerate(omega):
        groups.setdefault(find(k), []).append(r)
    return [groups[key] for key in sorted(groups)]


def _check_ring(f: Polynomial, setting: Setting):
    if f.ring != setting.ring:
        raise ValueError(f"polynomial lives in {f.ring!r}, setting expects {setting.ring!r}")


def is_w_invariant(f: Polynomial, setting: Setting) -> bool:
    _check_ring(f, setting)
    return all(g.act(f) == f for g in setting.generator_actions)


def _w_failure(f, setting):
    for k, g in enumerate(setting.generator_actions):
        if g.act(f) != f:
            return f"not invariant under Weyl generator {k} ({setting.rs.weyl_generators[k]!r})"
    return None


# -- per-root conditions ---------------------------------------------------------

def _with_t(ring: Ring, laurent: bool | None = None) -> Tuple[Ring, Polynomial]:
    name = "t"
    while name in ring.names:
        name += "_"
    big = ring.extend([name], laurent=laurent)
    return big, big.var(name)


def _additive_km_condition(f: Polynomial, setting: Setting, alpha) -> Optional[str]:
    """Each t-coefficient of f(Z + t alpha) - f(Z) must be divisible by h_alpha."""
    rs, ring = setting.rs, f.ring
    big, t = _with_t(ring)
    images = {k: big.var(ring.names[k]) + t * a for k, a in enumerate(alpha) if a}
    shifted = Substitution(ring, images, big)(f)
    h = rs.h(alpha, ring)
    for k, c in sorted(shifted.coefficients_in(t.ring.arity - 1).items()):
        if k == 0:
            continue
        c = c.to_ring(ring)
        if not divides(h, c):
            return f"coefficient of t^{k} in f(Z + t*alpha) is not divisible by h_alpha = {h}"
    return None


def d_alpha(f: Polynomial, setting: Setting, alpha) -> Polynomial:
    """D_alpha e^beta = (alpha, beta) e^beta."""
    rs = setting.rs
    out = {}
    for m, c in f.terms.items():
        p = rs.bilinear(alpha, m)
        if p:
            out[m] = c * p
    return Polynomial(f.ring, out)


def _multiplicative_km_condition(f, setting, alpha) -> Optional[str]:
    rs, ring = setting.rs, f.ring
    D = d_alpha(f, setting, alpha)
    g = rs.character(alpha, ring) - 1
    try:
        divide_exact(D, g)
    except NotDivisible:
        return f"D_alpha f is not divisible by e^alpha - 1 = {g}"
    return None


def _pair_of(alpha) -> Tuple[int, int]:
    i = next(k for k, a in enumerate(alpha) if a > 0)
    j = next(k for k, a in enumerate(alpha) if a < 0)
    return i, j


def _pq_condition(f, setting, alpha) -> Optional[str]:
    """q: Z_j -> t, Z_i -> -t;  p (torus): x_j -> t, x_i -> 1/t.  Must be t-free."""
    ring = f.ring
    i, j = _pair_of(alpha)
    big, t = _with_t(ring)
    if setting.family == "q":
        images = {j: t, i: -t}
    else:
        images = {j: t, i: t ** -1}
    g = Substitution(ring, images, big)(f)
    ti = big.arity - 1
    if g.degree_in(ti) > 0 or g.min_degree_in(ti) < 0:
        names = ring.names
        desc = f"{names[j]} -> t, {names[i]} -> " + ("-t" if setting.family == "q" else "t^-1")
        return f"substitution {desc} leaves a t-dependent result"
    return None


def _condition(f, setting, alpha) -> Optional[str]:
    if setting.rs.is_km:
        if setting.multiplicative:
            return _multiplicative_km_condition(f, setting, alpha)
        return _additive_km_condition(f, setting, alpha)
    if setting.family == "p" and not setting.multiplicative:
        return _additive_km_condition(f, setting, alpha)
    return _pq_condition(f, setting, alpha)


@dataclass
class Membership:
    member: bool
    witness: Optional[str] = None
    checked_roots: Tuple[tuple, ...] = ()

    def __bool__(self):
        return self.member


def check_membership(f: Polynomial, setting: Setting, *, strict: bool = False) -> Membership:
    """Full membership test with a description of the first failing condition."""
    _check_ring(f, setting)
    if setting.family == "p" and not setting.multiplicative:
        raise UnsupportedSetting("membership for p(n) on h* is not implemented")
    fail = _w_failure(f, setting)
    if fail:
        return Membership(False, fail)
    roots = list(setting.rs.omega) if strict else setting.omega_representatives()
    for alpha in roots:
        fail = _condition(f, setting, alpha)
        if fail:
            return Membership(False, f"alpha = {setting.rs.root_to_json(alpha)}: {fail}", tuple(roots))
    return Membership(True, None, tuple(roots))


def is_supersymmetric(f: Polynomial, setting: Setting, *, strict: bool = False) -> bool:
    return check_membership(f, setting, strict=strict).member


# -- T element ------------------------------------------------------------------

def rho_iso(rs: RootSystem) -> Tuple[Fraction, ...]:
    pos = rs.omega if rs.is_km else rs.positive_even
    total = [Fraction(0)] * rs.dim
    for r in pos:
        for k, x in enumerate(r):
            total[k] += x
    return tuple(x / 2 for x in total)


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class TElement:
    poly: Polynomial
    setting: Setting

    def __post_init__(self):
        if not is_w_invariant(self.poly, self.setting):
            raise AssertionError(f"T = {self.poly} is not W-invariant")
        if not is_supersymmetric(self.poly, self.setting):
            raise AssertionError(f"T = {self.poly} fails the membership oracle")
        try:
            image = ev_map(self.poly, self.setting)
        except RankTooSmall:
            return
        if not image.is_zero():
            raise AssertionError("ev(T) != 0")


def t_polynomial(setting: Setting) -> Polynomial:
    rs, ring = setting.rs, setting.ring
    fam = setting.family
    one = ring.one()
    if rs.is_km:
        if not setting.multiplicative:
            out = one
            for b in rs.omega:
                out = out * rs.h(b, ring)
            return out
        rho = rho_iso(rs)
        shift = tuple(_ceil(x) for x in rho)
        out = ring.monomial(shift)
        for a in rs.omega:
            out = out * (1 - rs.character(tuple(-x for x in a), ring))
        return out
    n = rs.m
    out = one
    for i in range(n):
        for j in range(i + 1, n):
            xi, xj = ring.var(i), ring.var(j)
            if fam == "q":
                out = out * (xi + xj)
            elif setting.multiplicative:
                out = out * (1 - xi * xj)
            else:
                raise UnsupportedSetting("no T element for p(n) on h*")
    return out


def t_element(setting: Setting) -> TElement:
    return TElement(t_polynomial(setting), setting)


# -- evaluation maps -------------------------------------------------------------

def reduced_setting(setting: Setting, allow_none: bool = False) -> Optional[Setting]:
    target = setting.rs.type.reduced()
    if target is None:
        if allow_none:
            return None
        raise RankTooSmall(f"{setting.rs.type} has no rank-lowering evaluation")
    return Setting(build_root_system(target), setting.space, experimental=setting.experimental)


def ev_target_ring(setting: Setting) -> Ring:
    red = reduced_setting(setting, allow_none=True)
    if red is not None:
        return red.ring
    rs = setting.rs
    if rs.defect == 0:
        raise RankTooSmall(f"{rs.type} has no isotropic roots to evaluate along")
    # e.g. gl(1|1) -> gl(0|0): the image is a constant
    return Ring([], laurent=setting.multiplicative)


def ev_images(setting: Setting) -> Dict[int, Fraction]:
    rs = setting.rs
    if rs.is_km:
        if rs.m < 1 or rs.n < 1:
            raise RankTooSmall(f"{rs.type} has no eps/delta pair to evaluate")
        a, b = rs.m - 1, rs.dim - 1
        v = Fraction(1) if setting.multiplicative else Fraction(0)
        return {a: v, b: v}
    if rs.m < 2:
        raise RankTooSmall(f"{rs.type} needs n >= 2")
    a, b = rs.m - 2, rs.m - 1
    if not setting.multiplicative:
        return {a: Fraction(0), b: Fraction(0)}
    if setting.family == "q":
        return {b: Fraction(1), a: Fraction(-1)}
    return {b: Fraction(1), a: Fraction(1)}


def ev_map(f: Polynomial, setting: Setting) -> Polynomial:
    """Rank-lowering evaluation: the last eps/delta pair (or last two eps) is specialised."""
    _check_ring(f, setting)
    target = ev_target_ring(setting)
    return Substitution(setting.ring, ev_images(setting), target)(f)


# -- candidates and bases --------------------------------------------------------

def power_sum(setting: Setting, r: int, sign: int | None = None) -> Polynomial:
    """Sum X_i^r + sign * sum Y_j^r with the supersymmetric sign by default."""
    rs, ring = setting.rs, setting.ring
    if sign is None:
        sign = -1 if setting.multiplicative else -((-1) ** r)
    out = ring.zero()
    for i in range(rs.m):
        out = out + ring.var(i) ** r
    for j in range(rs.n):
        out = out + sign * ring.var(rs.m + j) ** r
    return out


def generator_candidates(setting: Setting, max_degree: int) -> List[Polynomial]:
    """Low-degree supersymmetric elements; each one is checked by the oracle.

    Completeness is not claimed; anything the oracle rejects is dropped.
    """
    rs, ring = setting.rs, setting.ring
    fam = setting.family
    cands = [ring.one(), t_polynomial(setting)]
    exps = list(range(1, max_degree + 1))
    if setting.multiplicative:
        exps += [-r for r in exps]
    for r in exps:
        if fam in ("gl", "sl"):
            cands.append(power_sum(setting, r))
        elif fam == "osp":
            if setting.multiplicative:
                if r > 0:
                    cands.append(power_sum(setting, r) + power_sum(setting, -r))
            elif r % 2 == 0:
                cands.append(power_sum(setting, r))
        elif fam == "q":
            if r % 2:
                cands.append(sum((ring.var(i) ** r for i in range(rs.m)), ring.zero()))
        elif fam == "p" and r > 0:
            cands.append(sum((ring.var(i) ** r - ring.var(i) ** -r for i in range(rs.m)), ring.zero()))
    if setting.multiplicative and fam in ("gl", "sl"):
        ber = ring.one()
        for i in range(rs.m):
            ber = ber * ring.var(i)
        for j in range(rs.n):
            ber = ber * ring.var(rs.m + j) ** -1
        cands += [ber, ber ** -1]
    out, seen = [], set()
    for c in cands:
        if c in seen or c.is_zero():
            continue
        seen.add(c)
        if is_supersymmetric(c, setting):
            out.append(c)
    return out


def monomials_up_to(ring: Ring, degree: int):
    n = ring.arity
    lo = -degree if ring.laurent else 0
    out = []
    for m in cartesian(range(lo, degree + 1), repeat=n):
        if sum(abs(e) for e in m) <= degree:
            out.append(m)
    out.sort(key=lambda m: (sum(abs(e) for e in m), m))
    return out


def invariant_basis(setting: Setting, degree: int) -> List[Polynomial]:
    """Reynolds images of monomials of degree <= degree, one per W-orbit."""
    ring = setting.ring
    group = setting.group_actions
    seen, out = set(), []
    for m in monomials_up_to(ring, degree):
        if m in seen:
            continue
        mono = ring.monomial(m)
        orbit = {next(iter(g.act(mono).terms)) for g in group}
        seen |= orbit
        r = reynolds(mono, group)
        if not r.is_zero():
            out.append(r)
    return out


def groupoid_condition(f: Polynomial, setting: Setting, alpha) -> Polynomial:
    """A polynomial that vanishes iff f is constant along tau_{alpha,t} on the domain of alpha.

    Additive: restrict to Pi_alpha, translate by t*alpha.  Torus: restrict to
    T_alpha, move by c_alpha(t).  For q on the torus the domain is replaced by
    the line x_j = -x_i used by the membership oracle.
    """
    rs, ring = setting.rs, f.ring
    form = rs.domain_form(alpha)
    g = rs.gram_diag
    if setting.multiplicative:
        big, t = _with_t(ring)
        if setting.family == "q":
            i, j = _pair_of(alpha)
            g_t = Substitution(ring, {j: t, i: -t}, big)(f)
            parts = g_t.coefficients_in(big.arity - 1)
            return g_t - parts.get(0, big.zero())
        supp = [k for k, a in enumerate(form) if a]
        p, q = supp[-1], supp[0]
        # solve x^form = 1 for x_p (form has entries +-1 on two slots)
        a_p, a_q = form[p], form[q]
        base = {p: big.var(q) ** (-a_q * a_p)}
        c = rs.c_beta(alpha)
        moved = {}
        for k in range(ring.arity):
            img = base.get(k, big.var(k))
            if c[k]:
                img = img * t ** c[k]
            moved[k] = img
        lhs = Substitution(ring, moved, big)(f)
        rhs = Substitution(ring, base, big)(f)
        return lhs - rhs
    big, t = _with_t(ring)
    supp = [k for k, a in enumerate(form) if a]
    p = supp[-1]
    coeff = [gk * a for gk, a in zip(g, form)]
    solved = big.zero()
    for k, ck in enumerate(coeff):
        if ck and k != p:
            solved = solved - big.var(k) * Fraction(ck, coeff[p])
    base = {p: solved}
    moved = {}
    for k in range(ring.arity):
        img = base.get(k, big.var(k))
        if alpha[k]:
            img = img + t * alpha[k]
        moved[k] = img
    return Substitution(ring, moved, big)(f) - Substitution(ring, base, big)(f)


def supersymmetric_basis(setting: Setting, degree: int) -> List[Polynomial]:
    """Basis of the supersymmetric elements of degree <= degree (Laurent: L1 norm)."""
    inv = invariant_basis(setting, degree)
    if not inv:
        return []
    rows: Dict[tuple, List[Fraction]] = {}
    for alpha in setting.rs.omega:
        conds = [groupoid_condition(b, setting, alpha) for b in inv]
        for k, c in enumerate(conds):
            for m, a in c.terms.items():
                key = (alpha, m)
                row = rows.get(key)
                if row is None:
                    row = rows[key] = [Fraction(0)] * len(inv)
                row[k] += a
    matrix = [r for r in rows.values() if any(r)]
    null = linalg.nullspace(matrix, len(inv))
    out = []
    for vec in null:
        f = setting.ring.zero()
        for c, b in zip(vec, inv):
            if c:
                f = f + b * c
        out.append(f)
    return out


def random_invariant(setting: Setting, degree: int, rng, density: float = 0.5) -> Polynomial:
    f = random_polynomial(setting.ring, degree, rng, density=density)
    return reynolds(f, setting.group_actions)
