"""Closed W-invariant sets and their saturation under the Weyl groupoid.

A closed set is represented by an ideal.  ``s_closure`` builds, for each
prefix A(q) of the standard iso-chain, the level ideal

    J = I + (h_beta : beta in A)         (torus: e^beta - 1)
    K = J cap k[coordinates not touched by A]
    L = K + (z_beta : beta in A)
    I_q = cap_{w in W} w(L)

and intersects I with all I_q.  All set comparisons go through radical
membership, so non-radical presentations are harmless.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .groebner import (
    Ideal, canonical_key, eliminate, intersect, intersect_all, is_unit_ideal,
    radical_contains, same_zero_set, zero_set_contains,
)
from .groupoid import as_point, orbit_description
from .invariants import Setting, UnsupportedSetting, is_supersymmetric
from .poly import Polynomial, Ring, Substitution, reynolds

Z_BETA = "beta"
Z_SIGMA = "sigma"


def _require_km(setting: Setting):
    if not setting.rs.is_km:
        raise UnsupportedSetting("S-closure is only implemented for gl, sl and osp")


@dataclass
class ClosedSet:
    ideal: Ideal
    setting: Setting
    w_invariant: bool = False

    @classmethod
    def from_ideal(cls, ideal: Ideal, setting: Setting, check: bool = True) -> "ClosedSet":
        if ideal.ring != setting.ring:
            raise ValueError(f"ideal ring {ideal.ring!r} does not match {setting.ring!r}")
        flag = is_w_invariant_set(ideal, setting) if check else False
        return cls(ideal, setting, flag)


def is_w_invariant_set(ideal: Ideal, setting: Setting) -> bool:
    """V(I) is W-stable: every W-image of every generator lies in rad(I)."""
    for g in setting.generator_actions:
        for f in ideal.generators:
            img = g.act(f)
            if img != f and not radical_contains(ideal, img):
                return False
    return True


def w_orbit_ideal(polys: Sequence[Polynomial], setting: Setting) -> Ideal:
    """Ideal generated by all W-images of the given polynomials."""
    seen, gens = set(), []
    for f in polys:
        for g in setting.group_actions:
            img = g.act(f)
            if img not in seen and not img.is_zero():
                seen.add(img)
                gens.append(img)
    return Ideal(setting.ring, gens)


def point_ideal(pt: Sequence, setting: Setting) -> Ideal:
    ring = setting.ring
    pt = as_point(pt, setting)
    return Ideal(ring, [ring.var(k) - v for k, v in enumerate(pt)])


def points_ideal(points: Sequence[Sequence], setting: Setting) -> Ideal:
    uniq = sorted({as_point(p, setting) for p in points})
    return intersect_all([point_ideal(p, setting) for p in uniq])


def w_orbit_points(pt: Sequence, setting: Setting):
    pt = as_point(pt, setting)
    return sorted({setting.act_point(w, pt) for w in setting.rs.weyl_group})


# -- projections ---------------------------------------------------------------

def _chain_prefix(A, setting: Setting) -> int:
    chain = setting.rs.standard_chain()
    if isinstance(A, int):
        q = A
    else:
        A = [tuple(a) for a in A]
        q = len(A)
        if A != chain[:q]:
            raise ValueError("iso-set is not a prefix of the standard chain")
    if not 0 <= q <= len(chain):
        raise ValueError(f"prefix length {q} out of range 0..{len(chain)}")
    return q


def chain_coordinates(q: int, setting: Setting) -> List[int]:
    """Indices of the eps/delta coordinate pairs touched by beta_1..beta_q."""
    rs = setting.rs
    out = []
    for i in range(1, q + 1):
        out += [rs.m - i, rs.dim - i]
    return out


def projection_substitution(A, setting: Setting) -> Substitution:
    """Comorphism of p_A: the chain coordinate pairs go to 0 (additive) or 1 (torus)."""
    _require_km(setting)
    q = _chain_prefix(A, setting)
    v = 1 if setting.multiplicative else 0
    return Substitution(setting.ring, {k: v for k in chain_coordinates(q, setting)})


def project_point(pt: Sequence, A, setting: Setting):
    q = _chain_prefix(A, setting)
    v = Fraction(1) if setting.multiplicative else Fraction(0)
    pt = list(as_point(pt, setting))
    for k in chain_coordinates(q, setting):
        pt[k] = v
    return tuple(pt)


# -- level ideals ----------------------------------------------------------------

def domain_generator(beta, setting: Setting, ring: Ring | None = None) -> Polynomial:
    """h_beta, or e^beta - 1 on the torus: the equation of Pi_beta / T_beta."""
    rs = setting.rs
    ring = ring or setting.ring
    if setting.multiplicative:
        return rs.character(beta, ring) - 1
    return rs.h(beta, ring)


def z_generator(i: int, setting: Setting, convention: str = Z_BETA) -> Polynomial:
    """z for the i-th chain root (1-based)."""
    rs, ring = setting.rs, setting.ring
    beta = rs.standard_chain()[i - 1]
    if convention == Z_BETA:
        return domain_generator(beta, setting)
    if convention == Z_SIGMA:
        k = rs.m - i
        return ring.var(k) - 1 if setting.multiplicative else ring.var(k)
    raise ValueError(f"unknown z convention {convention!r}")


def _dedup(ideals: Sequence[Ideal]) -> List[Ideal]:
    seen, out = set(), []
    for I in ideals:
        key = canonical_key(I)
        if key not in seen:
            seen.add(key)
            out.append(I)
    return out


@dataclass
class LevelData:
    q: int
    J: Ideal
    K: Ideal
    L: Ideal
    ideal: Ideal
    images: int


def _support(beta) -> List[int]:
    return [k for k, a in enumerate(beta) if a]


def l_ideal(V: ClosedSet, A: Sequence, convention: str = Z_BETA) -> tuple:
    """(J, K, L) for an arbitrary iso-set A of coordinate-pair roots."""
    setting = V.setting
    _require_km(setting)
    rs, ring = setting.rs, setting.ring
    A = [tuple(b) for b in A]
    if not rs.is_isoset(A):
        raise ValueError("not an iso-set")
    J = V.ideal + [domain_generator(b, setting) for b in A]
    touched = [k for b in A for k in _support(b)]
    if len(set(touched)) != 2 * len(A):
        raise ValueError("iso-set roots must have disjoint coordinate-pair supports")
    K = eliminate(J, [ring.names[k] for k in touched])
    if convention == Z_BETA:
        zs = [domain_generator(b, setting) for b in A]
    elif convention == Z_SIGMA:
        v = 1 if setting.multiplicative else 0
        zs = [ring.var(_support(b)[0]) - v for b in A]
    else:
        raise ValueError(f"unknown z convention {convention!r}")
    return J, K, K + zs


def level_data(V: ClosedSet, q: int, convention: str = Z_BETA) -> LevelData:
    setting = V.setting
    _require_km(setting)
    chain = setting.rs.standard_chain()
    if not 1 <= q <= len(chain):
        raise ValueError(f"level {q} out of range 1..{len(chain)}")
    ring = setting.ring
    J, K, L = l_ideal(V, chain[:q], convention)
    if is_unit_ideal(L):
        unit = Ideal(ring, [ring.one()])
        return LevelData(q, J, K, L, unit, 1)
    images = _dedup([L.map(g.act) for g in setting.group_actions])
    return LevelData(q, J, K, L, intersect_all(images), len(images))


def level_ideal(V: ClosedSet, q: int, convention: str = Z_BETA) -> Ideal:
    return level_data(V, q, convention).ideal


def atyp_of_set(V: ClosedSet) -> int:
    """Largest q with I + (equations of beta_1..beta_q) a proper ideal."""
    setting = V.setting
    chain = setting.rs.standard_chain()
    r = 0
    for q in range(1, len(chain) + 1):
        J = V.ideal + [domain_generator(b, setting) for b in chain[:q]]
        if is_unit_ideal(J):
            break
        r = q
    return r


@dataclass
class SClosureResult:
    setting: Setting
    atyp: int
    levels: List[Ideal]
    ideal: Ideal
    symmetrized: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "type": self.setting.rs.type.to_dict(),
            "space": self.setting.space,
            "atypV": self.atyp,
            "levels": [
                {"q": q, "generators": [str(g) for g in I.generators]}
                for q, I in enumerate(self.levels)
            ],
            "closure": self.ideal.to_json(),
            "symmetrized_generators": self.symmetrized,
        }


def symmetrize_report(ideal: Ideal, setting: Setting) -> List[dict]:
    """Reynolds images of the generators, with a flag saying whether they can stand in for them."""
    out = []
    for g in ideal.generators:
        s = reynolds(g, setting.group_actions)
        in_ideal = not s.is_zero() and radical_contains(ideal, s)
        try:
            ok = in_ideal and is_supersymmetric(s, setting)
        except UnsupportedSetting:
            ok = False
        out.append({"generator": str(g), "symmetrized": str(s), "supersymmetric": ok})
    return out


def s_closure(V: ClosedSet, convention: str = Z_BETA, *, symmetrize: bool = False) -> SClosureResult:
    setting = V.setting
    _require_km(setting)
    if not V.w_invariant and not is_w_invariant_set(V.ideal, setting):
        raise ValueError("input set is not W-invariant")
    r = atyp_of_set(V)
    levels = [V.ideal] + [level_ideal(V, q, convention) for q in range(1, r + 1)]
    total = intersect_all(levels)
    res = SClosureResult(setting, r, levels, total)
    if symmetrize:
        res.symmetrized = symmetrize_report(total, setting)
    return res


def is_superalgebraic(V: ClosedSet, convention: str = Z_BETA) -> bool:
    closure = s_closure(V, convention)
    return same_zero_set(closure.ideal, V.ideal)


# -- tau stability -------------------------------------------------------------------

def tau_stable(ideal: Ideal, setting: Setting, roots: Sequence | None = None) -> bool:
    """V(I) cap Pi_beta is carried into V(I) by every tau_{beta,t} (t symbolic)."""
    return not tau_stability_failures(ideal, setting, roots)


def tau_stability_failures(ideal: Ideal, setting: Setting, roots: Sequence | None = None) -> List[tuple]:
    rs, ring = setting.rs, setting.ring
    roots = list(rs.omega if roots is None else roots)
    if is_unit_ideal(ideal):
        return []
    tname = "t"
    while tname in ring.names:
        tname += "_"
    big = ring.extend([tname])
    t = big.var(tname)
    failures = []
    for beta in roots:
        if setting.multiplicative:
            c = rs.c_beta(beta)
            images = {k: big.var(k) * t ** e for k, e in enumerate(c) if e}
        else:
            images = {k: big.var(k) + t * a for k, a in enumerate(beta) if a}
        move = Substitution(ring, images, big)
        base = Ideal(big, [g.to_ring(big) for g in ideal.generators] + [domain_generator(beta, setting, big)])
        for f in ideal.generators:
            if not radical_contains(base, move(f)):
                failures.append((beta, str(f)))
    return failures


# -- orbit closures --------------------------------------------------------------------

def orbit_closure_ideal(pt: Sequence, setting: Setting) -> Ideal:
    """Implicitize the orbit: eliminate the parameters from each W-translate of the family."""
    desc = orbit_description(pt, setting)
    rs, ring = setting.rs, setting.ring
    k = len(desc.F)
    tnames = [f"t{i + 1}" for i in range(k)]
    while any(n in ring.names for n in tnames):
        tnames = [n + "_" for n in tnames]
    big = ring.extend(tnames)
    ts = [big.var(n) for n in tnames]
    pieces = {}
    for w in rs.weyl_group:
        gens = []
        for i in range(rs.dim):
            j = w.perm[i]
            if setting.multiplicative:
                coord = big.const(desc.base[i])
                for a, t in zip(desc.F, ts):
                    e = rs.c_beta(a)[i]
                    if e:
                        coord = coord * t ** e
                coord = coord if w.signs[i] > 0 else coord ** -1
            else:
                coord = big.const(desc.base[i])
                for a, t in zip(desc.F, ts):
                    if a[i]:
                        coord = coord + t * a[i]
                coord = coord * w.signs[i]
            gens.append(big.var(j) - coord)
        key = tuple(sorted(str(g) for g in gens))
        if key in pieces:
            continue
        piece = eliminate(Ideal(big, gens), tnames, contract=True) if k else Ideal(big, gens)
        pieces[key] = Ideal(ring, [g.to_ring(ring) for g in piece.generators])
    return intersect_all(_dedup(list(pieces.values())))
