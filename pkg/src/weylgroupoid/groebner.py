"""Buchberger's algorithm and the ideal operations built on it.

Everything here is exact.  :func:`groebner_basis` works in affine rings only;
the higher level helpers (membership, radical membership, elimination,
intersection) also accept Laurent ideals, which they route through the affine
chart of :func:`laurent_to_affine`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .poly import Monomial, Polynomial, Ring, monomial_content, parse_polynomial

__all__ = [
    "BudgetExceeded", "GroebnerBudget", "MonomialOrder", "Ideal", "groebner_basis",
    "buchberger", "normal_form", "contains", "is_unit_ideal", "radical_contains",
    "eliminate", "intersect", "intersect_all", "laurent_to_affine", "LaurentChart",
    "zero_set_contains", "same_zero_set", "canonical_key", "GREVLEX", "LEX",
    "power_membership", "set_default_budget", "get_default_budget",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GroebnerBudget:
    max_pairs: int = 200_000
    max_degree: int = 200

    @classmethod
    def from_env(cls) -> "GroebnerBudget":
        return cls(
            max_pairs=int(os.environ.get("WEYLGROUPOID_MAX_PAIRS", cls.max_pairs)),
            max_degree=int(os.environ.get("WEYLGROUPOID_MAX_DEGREE", cls.max_degree)),
        )


_default_budget = GroebnerBudget.from_env()


def set_default_budget(budget: GroebnerBudget) -> None:
    global _default_budget
    _default_budget = budget


def get_default_budget() -> GroebnerBudget:
    return _default_budget


class MonomialOrder:
    """lex, grevlex, or a block order eliminating the variables in ``block``.

    The block order compares the block part first (grevlex within it), so any
    monomial containing a block variable beats every monomial without one.
    """

    def __init__(self, kind: str = "grevlex", block: Iterable[int] = ()):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.block = tuple(sorted(set(block)))
        if kind == "block" and not self.block:
            raise ValueError("block order needs a nonempty front block")

    @classmethod
    def eliminating(cls, ring: Ring, names: Iterable) -> "MonomialOrder":
        return cls("block", [ring.index(v) for v in names])

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', {list(self.block)})"
        return f"MonomialOrder({self.kind!r})"

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        front = tuple(m[i] for i in self.block)
        bset = set(self.block)
        rest = tuple(e for i, e in enumerate(m) if i not in bset)
        return (sum(front), tuple(-e for e in reversed(front)),
                sum(rest), tuple(-e for e in reversed(rest)))

    def to_dict(self, ring: Ring | None = None) -> dict:
        d = {"kind": self.kind}
        if self.kind == "block":
            d["block"] = [ring.names[i] for i in self.block] if ring else list(self.block)
        return d

    def tag(self) -> str:
        return self.kind if self.kind != "block" else "block:" + ",".join(map(str, self.block))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class Ideal:
    """Finite generator list in a ring, with cached reduced Groebner bases."""

    def __init__(self, ring: Ring, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, ring)
            elif isinstance(g, (int, Fraction)):
                g = ring.const(g)
            if g.ring != ring:
                raise ValueError(f"generator {g} lives in {g.ring!r}, not {ring!r}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: Dict[MonomialOrder, Tuple[Polynomial, ...]] = {}
        self._chart = None

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(map(str, self.generators))}])"

    def __add__(self, other):
        if isinstance(other, Ideal):
            other = other.generators
        return Ideal(self.ring, self.generators + tuple(other))

    def cached_basis(self, order: MonomialOrder = GREVLEX):
        return self._gb.get(order)

    def to_json(self, include_basis: bool = False, order: MonomialOrder = GREVLEX) -> dict:
        d = {"ring": self.ring.to_dict(), "generators": [str(g) for g in self.generators]}
        if include_basis:
            d["groebner_basis"] = {
                "order": order.to_dict(self.ring),
                "basis": [str(g) for g in groebner_basis(self, order)],
            }
        return d

    @classmethod
    def from_json(cls, d: dict, ring: Ring | None = None) -> "Ideal":
        if ring is None:
            ring = Ring.from_dict(d["ring"])
        elif "ring" in d and Ring.from_dict(d["ring"]) != ring:
            raise ValueError("ideal JSON ring does not match the expected ring")
        ideal = cls(ring, [parse_polynomial(s, ring) for s in d["generators"]])
        gb = d.get("groebner_basis")
        if gb and gb.get("order", {}).get("kind") in ("lex", "grevlex") and not ring.laurent:
            order = MonomialOrder(gb["order"]["kind"])
            ideal._gb[order] = tuple(parse_polynomial(s, ring) for s in gb["basis"])
        return ideal

    def map(self, fn) -> "Ideal":
        return Ideal(self.ring, [fn(g) for g in self.generators])


# -- core Buchberger ----------------------------------------------------------

def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Engine:
    def __init__(self, order: MonomialOrder, budget: GroebnerBudget):
        self.order = order
        self.budget = budget
        self._keys: Dict[Monomial, tuple] = {}
        self.polys: List[Dict[Monomial, Fraction]] = []
        self.lms: List[Monomial] = []
        self.reductions = 0

    def key(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self.order.key(m)
        return k

    def lead(self, p):
        return max(p, key=self.key)

    def monic(self, p):
        lm = self.lead(p)
        c = p[lm]
        if c != 1:
            inv = 1 / c
            p = {m: a * inv for m, a in p.items()}
        return p, lm

    def reduce(self, p, basis_idx, full=True):
        p = dict(p)
        r = {}
        polys, lms = self.polys, self.lms
        while p:
            lt = self.lead(p)
            for g in basis_idx:
                lm = lms[g]
                if _divides(lm, lt):
                    c = p.pop(lt)
                    shift = tuple(x - y for x, y in zip(lt, lm))
                    for m, a in polys[g].items():
                        if m == lm:
                            continue
                        mm = tuple(x + y for x, y in zip(m, shift))
                        s = p.get(mm, 0) - c * a
                        if s:
                            p[mm] = s
                        else:
                            p.pop(mm, None)
                    break
            else:
                if not full:
                    r.update(p)
                    return r
                r[lt] = p.pop(lt)
        return r

    def add(self, p) -> int:
        p, lm = self.monic(p)
        if sum(lm) > self.budget.max_degree:
            raise BudgetExceeded(f"basis element of degree {sum(lm)} exceeds max_degree")
        self.polys.append(p)
        self.lms.append(lm)
        return len(self.polys) - 1

    def spoly(self, i, j):
        lmi, lmj = self.lms[i], self.lms[j]
        l = _lcm(lmi, lmj)
        si = tuple(x - y for x, y in zip(l, lmi))
        sj = tuple(x - y for x, y in zip(l, lmj))
        out = {}
        for m, a in self.polys[i].items():
            out[tuple(x + y for x, y in zip(m, si))] = a
        for m, a in self.polys[j].items():
            mm = tuple(x + y for x, y in zip(m, sj))
            s = out.get(mm, 0) - a
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        return out

    def update(self, G, B, h):
        lms = self.lms
        lh = lms[h]
        C = [(h, g) for g in G]
        D = []
        while C:
            pair = C.pop()
            g1 = pair[1]
            l1 = _lcm(lh, lms[g1])
            if _coprime(lh, lms[g1]) or (
                not any(_divides(_lcm(lh, lms[g2]), l1) for _, g2 in C)
                and not any(_divides(_lcm(lh, lms[g2]), l1) for _, g2 in D)
            ):
                D.append(pair)
        E = [(h, g) for h_, g in D if not _coprime(lh, lms[g])]
        B_new = []
        for g1, g2 in B:
            l12 = _lcm(lms[g1], lms[g2])
            if (not _divides(lh, l12)
                    or _lcm(lms[g1], lh) == l12
                    or _lcm(lh, lms[g2]) == l12):
                B_new.append((g1, g2))
        B_new.extend(E)
        G_new = [g for g in G if not _divides(lh, lms[g])]
        G_new.append(h)
        return G_new, B_new

    def run(self, inputs):
        G: List[int] = []
        B: List[Tuple[int, int]] = []
        for p in sorted(inputs, key=lambda q: self.key(self.lead(q))):
            p = self.reduce(p, G) if G else p
            if p:
                G, B = self.update(G, B, self.add(p))
        while B:
            best = min(
                range(len(B)),
                key=lambda k: (self.key(_lcm(self.lms[B[k][0]], self.lms[B[k][1]])), B[k]),
            )
            i, j = B.pop(best)
            self.reductions += 1
            if self.reductions > self.budget.max_pairs:
                raise BudgetExceeded(f"more than {self.budget.max_pairs} S-pair reductions")
            h = self.reduce(self.spoly(i, j), G)
            if h:
                G, B = self.update(G, B, self.add(h))
        return self.reduced(G)

    def reduced(self, G):
        lms = self.lms
        G = sorted(G, key=lambda g: self.key(lms[g]))
        minimal = []
        for g in G:
            if not any(_divides(lms[h], lms[g]) for h in minimal):
                minimal.append(g)
        out = []
        for g in minimal:
            others = [h for h in minimal if h != g]
            p = self.polys[g]
            lm = lms[g]
            tail = {m: a for m, a in p.items() if m != lm}
            tail = self.reduce(tail, others) if tail else {}
            tail[lm] = Fraction(1)
            out.append(tail)
        out.sort(key=lambda p: self.key(self.lead(p)), reverse=True)
        return out


def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX,
                   budget: GroebnerBudget | None = None) -> Tuple[Polynomial, ...]:
    """Reduced Groebner basis (monic, sorted by descending leading monomial)."""
    if ideal.ring.laurent:
        raise ValueError("groebner_basis needs an affine ring; use laurent_to_affine first")
    cached = ideal._gb.get(order)
    if cached is not None:
        return cached
    eng = _Engine(order, budget or _default_budget)
    raw = eng.run([dict(g.terms) for g in ideal.generators])
    basis = tuple(Polynomial(ideal.ring, p, _trusted=True) for p in raw)
    ideal._gb[order] = basis
    return basis


buchberger = groebner_basis


def _reduce_by_basis(f: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    eng = _Engine(order, _default_budget)
    idx = []
    for b in basis:
        eng.polys.append(b.terms)
        eng.lms.append(eng.lead(b.terms))
        idx.append(len(eng.polys) - 1)
    r = eng.reduce(f.terms, idx) if f.terms else {}
    return Polynomial(f.ring, r, _trusted=True)


def normal_form(f: Polynomial, ideal: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    if f.ring != ideal.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if ideal.ring.laurent:
        chart = laurent_to_affine(ideal)
        return chart.to_laurent(normal_form(chart.to_affine(f), chart.ideal, order))
    return _reduce_by_basis(f, groebner_basis(ideal, order), order)


def contains(ideal: Ideal, f: Polynomial) -> bool:
    return normal_form(f, ideal).is_zero()


def is_unit_ideal(ideal: Ideal) -> bool:
    if ideal.ring.laurent:
        return is_unit_ideal(laurent_to_affine(ideal).ideal)
    gb = groebner_basis(ideal)
    return len(gb) == 1 and gb[0].is_constant()


def canonical_key(ideal: Ideal) -> Tuple[str, ...]:
    """Hashable identity of the ideal: its reduced grevlex basis as strings."""
    if ideal.ring.laurent:
        ideal = laurent_to_affine(ideal).ideal
    return tuple(str(g) for g in groebner_basis(ideal))


# -- Laurent rings ---------------------------------------------------------------

class LaurentChart:
    """Affine model k[x, x_inv]/(x*x_inv - 1) of a Laurent ring."""

    def __init__(self, ring: Ring):
        if not ring.laurent:
            raise ValueError("LaurentChart needs a Laurent ring")
        self.laurent_ring = ring
        n = ring.arity
        inv_names = [_fresh(ring.names, f"{v}_inv") for v in ring.names]
        self.affine_ring = Ring(ring.names + tuple(inv_names))
        self.n = n
        self.relations = [
            self.affine_ring.var(i) * self.affine_ring.var(n + i) - 1 for i in range(n)
        ]

    def to_affine(self, f: Polynomial) -> Polynomial:
        n = self.n
        out = {}
        for m, c in f.terms.items():
            e = [0] * (2 * n)
            for i, k in enumerate(m):
                if k > 0:
                    e[i] = k
                elif k < 0:
                    e[n + i] = -k
            out[tuple(e)] = c
        return Polynomial(self.affine_ring, out)

    def to_laurent(self, f: Polynomial) -> Polynomial:
        n = self.n
        out = {}
        for m, c in f.terms.items():
            e = tuple(m[i] - m[n + i] for i in range(n))
            out[e] = out.get(e, 0) + c
        return Polynomial(self.laurent_ring, out)

    def inverse_names(self, names) -> List[str]:
        return [self.affine_ring.names[self.n + self.laurent_ring.index(v)] for v in names]


def _fresh(existing, name):
    while name in existing:
        name = name + "_"
    return name


class _ChartIdeal:
    def __init__(self, chart: LaurentChart, ideal: Ideal):
        self.chart = chart
        self.ideal = ideal

    def to_affine(self, f):
        return self.chart.to_affine(f)

    def to_laurent(self, f):
        return self.chart.to_laurent(f)


def clean_laurent(ring: Ring, gens) -> List[Polynomial]:
    """Clear monomial units from Laurent generators, make them monic, drop duplicates."""
    out, seen = [], set()
    for g in gens:
        if g.is_zero():
            continue
        low = monomial_content(g)
        g = g.scale_monomial(tuple(-e for e in low)).monic()
        if g not in seen:
            seen.add(g)
            out.append(g)
    out.sort(key=lambda g: (g.total_degree(), len(g), str(g)))
    return out


def laurent_to_affine(ideal: Ideal) -> _ChartIdeal:
    """Affine presentation of a Laurent ideal: cleared generators plus x*x_inv - 1."""
    if ideal._chart is None:
        chart = LaurentChart(ideal.ring)
        gens = [chart.to_affine(g) for g in ideal.generators] + chart.relations
        ideal._chart = _ChartIdeal(chart, Ideal(chart.affine_ring, gens))
    return ideal._chart


# -- radical membership, elimination, intersection ------------------------------

def radical_contains(ideal: Ideal, f: Polynomial) -> bool:
    """Is f in the radical of ideal?  Rabinowitsch: 1 in I + (z f - 1)."""
    if f.ring != ideal.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if ideal.ring.laurent:
        ch = laurent_to_affine(ideal)
        return radical_contains(ch.ideal, ch.to_affine(f))
    if f.is_zero():
        return True
    ring = ideal.ring
    big = ring.extend([_fresh(ring.names, "z")])
    z = big.var(big.arity - 1)
    gens = [g.to_ring(big) for g in ideal.generators] + [z * f.to_ring(big) - 1]
    return is_unit_ideal(Ideal(big, gens))


def eliminate(ideal: Ideal, drop: Sequence, *, contract: bool = False) -> Ideal:
    """Generators of I intersected with k[remaining variables].

    With ``contract`` the result lives in the ring of the remaining variables;
    otherwise it stays in the original ring.
    """
    ring = ideal.ring
    drop_names = [ring.names[ring.index(v)] for v in drop]
    keep = [v for v in ring.names if v not in drop_names]
    if ring.laurent:
        ch = laurent_to_affine(ideal)
        aff_drop = drop_names + ch.chart.inverse_names(drop_names)
        elim = eliminate(ch.ideal, aff_drop)
        gens = clean_laurent(ring, [ch.to_laurent(g) for g in elim.generators])
        out = Ideal(ring, gens)
        if contract:
            return Ideal(Ring(keep, laurent=True), [g.to_ring(Ring(keep, laurent=True)) for g in out.generators])
        return out
    if not drop_names:
        gb = groebner_basis(ideal)
        out = Ideal(ring, gb)
    else:
        order = MonomialOrder.eliminating(ring, drop_names)
        gb = groebner_basis(ideal, order)
        dropped = {ring.index(v) for v in drop_names}
        kept = [g for g in gb if not any(i in dropped for i in g.variables())]
        out = Ideal(ring, kept)
    if contract:
        small = Ring(keep)
        return Ideal(small, [g.to_ring(small) for g in out.generators])
    return out


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via eliminating t from t*I + (1 - t)*J."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if ring.laurent:
        chI, chJ = laurent_to_affine(I), laurent_to_affine(J)
        out = intersect(chI.ideal, chJ.ideal)
        return Ideal(ring, clean_laurent(ring, [chI.to_laurent(g) for g in out.generators]))
    if not I.generators or not J.generators:
        return Ideal(ring, [])
    if is_unit_ideal(I):
        return J
    if is_unit_ideal(J):
        return I
    tname = _fresh(ring.names, "t")
    big = Ring((tname,) + ring.names)
    t = big.var(0)
    gens = [t * g.to_ring(big) for g in I.generators]
    gens += [(1 - t) * g.to_ring(big) for g in J.generators]
    elim = eliminate(Ideal(big, gens), [tname], contract=True)
    return Ideal(ring, [g.to_ring(ring) for g in elim.generators])


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("nothing to intersect")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def zero_set_contains(I: Ideal, J: Ideal) -> bool:
    """V(J) contains V(I): every generator of J lies in rad(I)."""
    return all(radical_contains(I, g) for g in J.generators)


def same_zero_set(I: Ideal, J: Ideal) -> bool:
    return zero_set_contains(I, J) and zero_set_contains(J, I)


def power_membership(ideal: Ideal, f: Polynomial, max_power: int) -> int | None:
    """Smallest k <= max_power with f**k in I, else None."""
    p = f.ring.one()
    for k in range(1, max_power + 1):
        p = p * f
        if contains(ideal, p):
            return k
    return None
