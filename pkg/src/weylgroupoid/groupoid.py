"""The continuous Weyl groupoid acting on h* and on the torus.

Generators are Weyl group elements (defined everywhere) and partial moves
tau_{alpha,t}: translation by t*alpha on the hyperplane Pi_alpha, or the
one-parameter subgroup c_alpha(t) on the subtorus T_alpha.  Orbit membership
answers always come with a witness path that is replayed before returning.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .invariants import Setting
from .poly import GroupElement


class NotDefinedAt(ValueError):
    """A tau move was applied outside its domain."""


Point = Tuple[Fraction, ...]


def as_point(pt: Sequence, setting: Setting) -> Point:
    pt = tuple(Fraction(v) for v in pt)
    if len(pt) != setting.rs.dim:
        raise ValueError(f"point needs {setting.rs.dim} coordinates")
    if setting.multiplicative and any(v == 0 for v in pt):
        raise ValueError("torus points have nonzero coordinates")
    return pt


def in_domain(pt: Point, alpha, setting: Setting) -> bool:
    """lambda in Pi_alpha (additive) or lambda in T_alpha (torus)."""
    rs = setting.rs
    form = rs.domain_form(alpha)
    if setting.multiplicative:
        val = Fraction(1)
        for x, e in zip(pt, form):
            if e:
                val *= x ** e
        return val == 1
    return rs.bilinear(pt, form) == 0


def E_set(pt: Sequence, setting: Setting) -> List[tuple]:
    pt = as_point(pt, setting)
    return [a for a in setting.rs.isotropic if in_domain(pt, a, setting)]


def maximal_isoset_at(pt: Sequence, setting: Setting) -> Tuple[Tuple[tuple, ...], List[tuple]]:
    """(F(lambda), E(lambda)); F is the first maximum iso-set of E cap Omega in Omega order."""
    E = E_set(pt, setting)
    eset = set(E)
    pool = [a for a in setting.rs.omega if a in eset]
    best: Tuple[tuple, ...] = ()
    for s in setting.rs.enumerate_isosets(pool=pool):
        if len(s) > len(best):
            best = s
    return best, E


def atyp(pt: Sequence, setting: Setting) -> int:
    """Largest iso-set A with lambda in the domain of every member (brute force over Omega)."""
    pt = as_point(pt, setting)
    best = 0
    for A in setting.rs.enumerate_isosets():
        if len(A) > best and all(in_domain(pt, a, setting) for a in A):
            best = len(A)
    return best


@dataclass(frozen=True)
class GroupoidGenerator:
    kind: str
    w: Optional[GroupElement] = None
    alpha: Optional[tuple] = None
    t: Fraction = Fraction(0)

    @classmethod
    def weyl(cls, w: GroupElement) -> "GroupoidGenerator":
        return cls("weyl", w=w)

    @classmethod
    def tau(cls, alpha, t) -> "GroupoidGenerator":
        return cls("tau", alpha=tuple(alpha), t=Fraction(t))

    def to_json(self, setting: Setting) -> dict:
        if self.kind == "weyl":
            return {"kind": "weyl", "perm": list(self.w.perm), "signs": list(self.w.signs)}
        return {"kind": "tau", "alpha": setting.rs.root_to_json(self.alpha), "t": str(self.t)}


def apply_generator(g: GroupoidGenerator, pt: Sequence, setting: Setting) -> Point:
    pt = as_point(pt, setting)
    if g.kind == "weyl":
        return setting.act_point(g.w, pt)
    if g.kind != "tau":
        raise ValueError(f"unknown generator kind {g.kind!r}")
    alpha = g.alpha
    if tuple(alpha) not in set(setting.rs.isotropic):
        raise ValueError(f"{alpha} is not in Delta_iso")
    if not in_domain(pt, alpha, setting):
        raise NotDefinedAt(f"tau_{setting.rs.root_to_json(alpha)} is not defined at {pt}")
    if setting.multiplicative:
        if g.t == 0:
            raise ValueError("torus moves need t != 0")
        c = setting.rs.c_beta_point(alpha, g.t)
        return tuple(x * y for x, y in zip(pt, c))
    return tuple(x + g.t * a for x, a in zip(pt, alpha))


def replay(path: Sequence[GroupoidGenerator], pt: Sequence, setting: Setting) -> Point:
    cur = as_point(pt, setting)
    for g in path:
        cur = apply_generator(g, cur, setting)
    return cur


@dataclass
class OrbitDescription:
    base: Point
    F: Tuple[tuple, ...]
    setting: Setting
    E: List[tuple] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.F)

    def point(self, w: GroupElement, ts: Sequence) -> Point:
        """w(lambda + sum t_a a) or w(prod c_a(t_a) lambda)."""
        path = [GroupoidGenerator.tau(a, t) for a, t in zip(self.F, ts)]
        path.append(GroupoidGenerator.weyl(w))
        return replay(path, self.base, self.setting)

    def to_json(self) -> dict:
        rs, s = self.setting.rs, self.setting
        pt = rs.torus_to_json(self.base) if s.multiplicative else rs.weight_to_json(self.base)
        return {
            "type": rs.type.to_dict(),
            "space": s.space,
            "base": pt,
            "F": [rs.root_to_json(a) for a in self.F],
            "E": [rs.root_to_json(a) for a in self.E],
            "dim": self.dim,
            "atyp": self.dim,
            "weyl_group_order": len(rs.weyl_group),
        }


def orbit_description(pt: Sequence, setting: Setting) -> OrbitDescription:
    pt = as_point(pt, setting)
    F, E = maximal_isoset_at(pt, setting)
    return OrbitDescription(pt, F, setting, E)


@dataclass
class Witness:
    w: GroupElement
    ts: Tuple[Fraction, ...]
    F: Tuple[tuple, ...]

    def path(self) -> List[GroupoidGenerator]:
        out = [GroupoidGenerator.tau(a, t) for a, t in zip(self.F, self.ts)]
        out.append(GroupoidGenerator.weyl(self.w))
        return out

    def to_json(self, setting: Setting) -> dict:
        return {
            "w": {"perm": list(self.w.perm), "signs": list(self.w.signs)},
            "t": [str(t) for t in self.ts],
            "F": [setting.rs.root_to_json(a) for a in self.F],
            "path": [g.to_json(setting) for g in self.path()],
        }


def _solve_additive(base, target, F):
    diff = [y - x for x, y in zip(base, target)]
    if not F:
        return () if not any(diff) else None
    cols = [list(a) for a in F]
    rows = [[c[k] for c in cols] for k in range(len(base))]
    sol = linalg.solve(rows, diff)
    if sol is None:
        return None
    return tuple(sol)


def _solve_torus(base, target, F, setting):
    ratio = [y / x for x, y in zip(base, target)]
    rs = setting.rs
    ts = []
    for a in F:
        c = rs.c_beta(a)
        k = next(i for i, e in enumerate(c) if e)
        t = ratio[k] ** c[k]  # c[k] is +-1
        ts.append(t)
    got = [Fraction(1)] * len(base)
    for a, t in zip(F, ts):
        for i, e in enumerate(rs.c_beta(a)):
            if e:
                got[i] *= t ** e
    if got != ratio:
        return None
    return tuple(ts)


def orbit_contains(lam: Sequence, mu: Sequence, setting: Setting) -> Optional[Witness]:
    """Witness (w, t) with mu = w(lambda + sum t_a a) (or the torus analogue), else None."""
    lam, mu = as_point(lam, setting), as_point(mu, setting)
    F, _ = maximal_isoset_at(lam, setting)
    for w in setting.rs.weyl_group:
        target = setting.act_point(w.inverse(), mu)
        if setting.multiplicative:
            ts = _solve_torus(lam, target, F, setting)
        else:
            ts = _solve_additive(lam, target, F)
        if ts is None:
            continue
        wit = Witness(w, ts, F)
        end = replay(wit.path(), lam, setting)
        if end != mu:
            raise AssertionError(f"witness replay ended at {end}, expected {mu}")
        return wit
    return None


def equivalent(lam: Sequence, mu: Sequence, setting: Setting) -> bool:
    return orbit_contains(lam, mu, setting) is not None or orbit_contains(mu, lam, setting) is not None


def sample_orbit_point(desc: OrbitDescription, rng, t_range: int = 5) -> Point:
    W = desc.setting.rs.weyl_group
    w = W[rng.randrange(len(W))]
    ts = []
    for _ in desc.F:
        t = Fraction(rng.randint(-t_range, t_range), rng.randint(1, 3))
        if desc.setting.multiplicative and t == 0:
            t = Fraction(1)
        ts.append(t)
    return desc.point(w, ts)


def stabilizer_move(pt: Sequence, beta, setting: Setting) -> Optional[GroupElement]:
    """u in W with u(lambda) = lambda and u(beta) = +-a for some a in F(lambda)."""
    pt = as_point(pt, setting)
    F, _ = maximal_isoset_at(pt, setting)
    targets = set(F) | {tuple(-x for x in a) for a in F}
    rs = setting.rs
    for u in rs.weyl_group:
        if setting.act_point(u, pt) != pt:
            continue
        img = rs.act_weight(u, beta)
        if img in targets:
            return u
    return None
