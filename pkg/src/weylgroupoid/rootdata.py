"""Root data for gl, sl, osp, p and q.

Weights live in the basis eps_1..eps_m, delta_1..delta_n (eps only for p and
q).  The form is diagonal: +1 on eps, -1 on delta for the Kac-Moody families,
the identity for p and q.  Weyl group elements are signed permutations
``(perm, signs)`` acting on a weight by ``(w v)[perm[i]] = signs[i] * v[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .poly import GroupElement, Polynomial, Ring, generate_group

Vector = Tuple[int, ...]

FAMILIES = ("gl", "sl", "osp", "p", "q")


class InvalidType(ValueError):
    pass


class NotIsotropic(ValueError):
    pass


@dataclass(frozen=True)
class SuperType:
    """``osp`` uses the literal labels of osp(M|N): SuperType("osp", 5, 4) is osp(5|4).
    ``p`` and ``q`` only use n."""

    family: str
    m: int = 0
    n: int = 0

    def __post_init__(self):
        f, m, n = self.family, self.m, self.n
        if f not in FAMILIES:
            raise InvalidType(f"unknown family {f!r}")
        if m < 0 or n < 0:
            raise InvalidType("rank parameters must be nonnegative")
        if f in ("p", "q"):
            if m:
                raise InvalidType(f"{f}(n) takes only n")
            if n < 1:
                raise InvalidType(f"{f}(n) needs n >= 1")
            return
        if m == 0 and n == 0:
            raise InvalidType("m and n cannot both be 0")
        if f == "sl" and m == n:
            raise InvalidType("sl(m|n) needs m != n")
        if f == "osp" and n % 2:
            raise InvalidType("osp(m|n) needs n even")

    @property
    def is_km(self) -> bool:
        return self.family in ("gl", "sl", "osp")

    @property
    def n_eps(self) -> int:
        if self.family == "osp":
            return self.m // 2
        if self.family in ("p", "q"):
            return self.n
        return self.m

    @property
    def n_delta(self) -> int:
        if self.family == "osp":
            return self.n // 2
        if self.family in ("p", "q"):
            return 0
        return self.n

    def label(self) -> str:
        if self.family in ("p", "q"):
            return f"{self.family}({self.n})"
        return f"{self.family}({self.m}|{self.n})"

    __str__ = label

    def to_dict(self) -> dict:
        if self.family in ("p", "q"):
            return {"family": self.family, "n": self.n}
        return {"family": self.family, "m": self.m, "n": self.n}

    @classmethod
    def from_dict(cls, d: dict) -> "SuperType":
        try:
            return cls(d["family"], int(d.get("m", 0)), int(d.get("n", 0)))
        except KeyError as exc:
            raise InvalidType(f"type descriptor missing {exc}") from None

    def reduced(self) -> Optional["SuperType"]:
        """Type of g_x for a root vector x (None when the rank is too small)."""
        f, m, n = self.family, self.m, self.n
        if f in ("gl", "sl"):
            if m < 1 or n < 1:
                return None
            if m - 1 == 0 and n - 1 == 0:
                return None
            if f == "sl":
                return SuperType("sl", m - 1, n - 1)
            return SuperType("gl", m - 1, n - 1)
        if f == "osp":
            if m < 2 or n < 2 or (m - 2 == 0 and n - 2 == 0):
                return None
            return SuperType("osp", m - 2, n - 2)
        if n < 2 or n == 2:
            return None
        return SuperType(f, 0, n - 2)


def _unit(dim, i, c=1):
    v = [0] * dim
    v[i] = c
    return tuple(v)


def _add(*vs):
    return tuple(sum(x) for x in zip(*vs))


def _neg(v):
    return tuple(-x for x in v)


def _rename(f: Polynomial, ring: Ring) -> Polynomial:
    """Move f into a ring whose first variables are f's (positionally)."""
    out = {}
    pad = ring.arity - f.ring.arity
    if pad < 0:
        raise ValueError(f"{ring!r} is too small for {f.ring!r}")
    for m, c in f.terms.items():
        out[tuple(m) + (0,) * pad] = c
    return Polynomial(ring, out)


def _is_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


class RootSystem:
    """Roots, form, Weyl group and iso-set data for one :class:`SuperType`."""

    def __init__(self, stype: SuperType):
        self.type = stype
        self.m = stype.n_eps
        self.n = stype.n_delta
        self.dim = self.m + self.n
        self.gram_diag = (1,) * self.m + (-1,) * self.n
        self.even_roots, self.odd_roots = self._roots()
        self.weyl_generators = self._weyl_generators()

    # -- construction --------------------------------------------------------
    def eps(self, i, c=1):
        return _unit(self.dim, i, c)

    def delta(self, j, c=1):
        return _unit(self.dim, self.m + j, c)

    def _roots(self):
        t, m, n = self.type, self.m, self.n
        e, d = self.eps, self.delta
        even, odd = set(), set()
        fam = t.family
        if fam in ("gl", "sl", "p", "q"):
            for i in range(m):
                for j in range(m):
                    if i != j:
                        even.add(_add(e(i), e(j, -1)))
            for i in range(n):
                for j in range(n):
                    if i != j:
                        even.add(_add(d(i), d(j, -1)))
        if fam in ("gl", "sl"):
            for i in range(m):
                for j in range(n):
                    r = _add(e(i), d(j, -1))
                    odd.update((r, _neg(r)))
        elif fam == "osp":
            odd_m = t.m % 2 == 1
            for i, j in combinations(range(m), 2):
                for a in (1, -1):
                    for b in (1, -1):
                        even.add(_add(e(i, a), e(j, b)))
            for i, j in combinations(range(n), 2):
                for a in (1, -1):
                    for b in (1, -1):
                        even.add(_add(d(i, a), d(j, b)))
            for j in range(n):
                even.update((d(j, 2), d(j, -2)))
                if odd_m:
                    odd.update((d(j), d(j, -1)))
            if odd_m:
                for i in range(m):
                    even.update((e(i), e(i, -1)))
            for i in range(m):
                for j in range(n):
                    for a in (1, -1):
                        for b in (1, -1):
                            odd.add(_add(e(i, a), d(j, b)))
        elif fam == "p":
            for i in range(m):
                for j in range(i, m):
                    r = _add(e(i), e(j))
                    odd.add(r)
                    if i != j:
                        odd.add(_neg(r))
        elif fam == "q":
            odd = set(even)
        return sorted(even, reverse=True), sorted(odd, reverse=True)

    def _weyl_generators(self):
        fam, m, n, N = self.type.family, self.m, self.n, self.dim
        gens = []

        def transposition(a, b):
            return GroupElement.swap(N, a, b)

        def flip(a):
            signs = [1] * N
            signs[a] = -1
            return GroupElement(range(N), signs)

        for i in range(m - 1):
            gens.append(transposition(i, i + 1))
        for j in range(n - 1):
            gens.append(transposition(m + j, m + j + 1))
        if fam == "osp":
            if self.type.m % 2 == 1 and m:
                gens.append(flip(m - 1))
            elif m >= 2:
                # reflection in eps_{m-1} + eps_m
                perm = list(range(N))
                perm[m - 2], perm[m - 1] = m - 1, m - 2
                signs = [1] * N
                signs[m - 2] = signs[m - 1] = -1
                gens.append(GroupElement(perm, signs))
            if n:
                gens.append(flip(m + n - 1))
        return gens

    # -- basic queries ---------------------------------------------------------
    def __repr__(self):
        return f"RootSystem({self.type.label()})"

    @property
    def is_km(self) -> bool:
        return self.type.is_km

    @property
    def weight_lattice(self) -> str:
        return "root lattice" if self.type.family == "sl" else "full character lattice"

    def bilinear(self, a: Sequence, b: Sequence) -> Fraction:
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError(f"expected vectors of length {self.dim}")
        return sum((Fraction(g) * x * y for g, x, y in zip(self.gram_diag, a, b)), Fraction(0))

    def gram(self) -> List[List[int]]:
        return [[self.gram_diag[i] if i == j else 0 for j in range(self.dim)] for i in range(self.dim)]

    @cached_property
    def roots(self) -> List[Vector]:
        return sorted(set(self.even_roots) | set(self.odd_roots), reverse=True)

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in set(self.even_roots) or v in set(self.odd_roots)

    @cached_property
    def positive_even(self) -> List[Vector]:
        return [r for r in self.even_roots if _is_positive(r)]

    @cached_property
    def positive_odd(self) -> List[Vector]:
        return [r for r in self.odd_roots if _is_positive(r)]

    @cached_property
    def isotropic(self) -> List[Vector]:
        """Delta_iso: odd isotropic roots (KM), Delta_0^+ (p, q)."""
        if self.is_km:
            return [r for r in self.odd_roots if self.bilinear(r, r) == 0]
        return list(self.positive_even)

    @cached_property
    def omega(self) -> List[Vector]:
        """Positive isotropic roots, ordered with the standard chain first."""
        if self.is_km:
            pos = [r for r in self.isotropic if _is_positive(r)]
        else:
            pos = list(self.positive_even)
        chain = self.standard_chain()
        return chain + [r for r in pos if r not in chain]

    def bar(self, alpha: Sequence) -> Vector:
        """eps_i - eps_j -> eps_i + eps_j (p and q); extended by bar(-a) = -bar(a)."""
        if self.is_km:
            raise ValueError("bar is only defined for p and q")
        alpha = tuple(alpha)
        if _is_positive(alpha):
            return tuple(abs(x) for x in alpha)
        return tuple(-abs(x) for x in alpha)

    def iso_pairing(self, a: Sequence, b: Sequence) -> Fraction:
        """(a, b) in KM types, (a, bar b) in p and q."""
        if self.is_km:
            return self.bilinear(a, b)
        return self.bilinear(a, self.bar(b))

    def domain_form(self, alpha: Sequence) -> Vector:
        """The vector whose pairing cuts out Pi_alpha (alpha itself, or bar alpha)."""
        return tuple(alpha) if self.is_km else self.bar(alpha)

    # -- Weyl group --------------------------------------------------------------
    @cached_property
    def weyl_group(self) -> List[GroupElement]:
        return generate_group(self.weyl_generators, self.dim)

    @staticmethod
    def act_weight(w: GroupElement, v: Sequence) -> tuple:
        out = [0] * len(v)
        for i, x in enumerate(v):
            out[w.perm[i]] = w.signs[i] * x
        return tuple(out)

    @staticmethod
    def act_torus(w: GroupElement, x: Sequence) -> tuple:
        out = [None] * len(x)
        for i, v in enumerate(x):
            out[w.perm[i]] = v if w.signs[i] > 0 else 1 / Fraction(v)
        return tuple(out)

    @staticmethod
    def polynomial_action(w: GroupElement, multiplicative: bool) -> GroupElement:
        """Pullback action on functions: (w f)(x) = f(w^-1 x)."""
        if multiplicative:
            return GroupElement(w.perm, None, [s < 0 for s in w.signs])
        return w

    # -- polynomial rings --------------------------------------------------------
    def variable_names(self, multiplicative: bool = False) -> List[str]:
        a, b = ("x", "y") if multiplicative else ("X", "Y")
        return [f"{a}{i + 1}" for i in range(self.m)] + [f"{b}{j + 1}" for j in range(self.n)]

    def ring(self, multiplicative: bool = False) -> Ring:
        return Ring(self.variable_names(multiplicative), laurent=multiplicative)

    def h(self, alpha: Sequence, ring: Ring | None = None) -> Polynomial:
        """Linear form h_alpha = sum_k (G alpha)_k Z_k, i.e. lambda -> (lambda, alpha)."""
        base = self.ring(False)
        terms = {}
        for k, (g, a) in enumerate(zip(self.gram_diag, alpha)):
            if a:
                terms[_unit(self.dim, k)] = g * a
        f = Polynomial(base, terms)
        if ring is None or ring == base:
            return f
        return _rename(f, ring)

    def character(self, beta: Sequence, ring: Ring | None = None) -> Polynomial:
        """e^beta as a Laurent monomial."""
        base = self.ring(True)
        f = Polynomial(base, {tuple(int(b) for b in beta): 1})
        if ring is None or ring == base:
            return f
        return _rename(f, ring)

    def c_beta(self, beta: Sequence) -> Vector:
        """Exponent vector of the one-parameter subgroup c_beta: t -> t^(G beta)."""
        beta = tuple(beta)
        if self.is_km:
            if not self.is_root(beta):
                raise ValueError(f"{beta} is not a root")
        elif beta not in set(self.even_roots):
            raise ValueError(f"{beta} is not an even root")
        return tuple(g * b for g, b in zip(self.gram_diag, beta))

    def c_beta_point(self, beta: Sequence, t) -> tuple:
        t = Fraction(t)
        if t == 0:
            raise ValueError("c_beta needs t != 0")
        return tuple(t ** e for e in self.c_beta(beta))

    # -- iso-sets ------------------------------------------------------------------
    def standard_chain(self) -> List[Vector]:
        t, m, n = self.type, self.m, self.n
        out = []
        if self.is_km:
            for i in range(1, min(m, n) + 1):
                out.append(_add(self.eps(m - i), self.delta(n - i, -1)))
        else:
            for i in range(1, m // 2 + 1):
                out.append(_add(self.eps(m - 2 * i), self.eps(m - 2 * i + 1, -1)))
        return out

    def is_isoset(self, roots: Sequence[Sequence]) -> bool:
        roots = [tuple(r) for r in roots]
        if len(set(roots)) != len(roots):
            return False
        iso = set(self.isotropic)
        if any(r not in iso for r in roots):
            return False
        if any(self.iso_pairing(a, b) != 0 for a in roots for b in roots):
            return False
        return not roots or linalg.rank(roots) == len(roots)

    def enumerate_isosets(self, size_cap: int | None = None, pool: Sequence | None = None):
        """All iso-sets inside ``pool`` (default Omega) of size <= size_cap, as tuples."""
        pool = list(self.omega if pool is None else pool)
        out = [()]

        def grow(current, start):
            if size_cap is not None and len(current) >= size_cap:
                return
            for k in range(start, len(pool)):
                r = pool[k]
                if self.iso_pairing(r, r) != 0:
                    continue
                if any(self.iso_pairing(r, a) != 0 or self.iso_pairing(a, r) != 0 for a in current):
                    continue
                cand = current + (r,)
                if linalg.rank(cand) < len(cand):
                    continue
                out.append(cand)
                grow(cand, k + 1)

        grow((), 0)
        return out

    @cached_property
    def defect(self) -> int:
        return max(len(s) for s in self.enumerate_isosets())

    # -- DS reduction --------------------------------------------------------------
    def ds_reduction(self, beta) -> "DSReduction":
        """Root data of g_x for x a root vector of beta.

        For p and q, ``beta`` may be an index pair (i, j) (0-based), standing
        for eps_i - eps_j in Delta_0^+; the orthogonality test then uses the
        bar pairing.
        """
        beta = self._as_ds_root(beta)
        delta_beta = [
            a for a in self.roots
            if self.iso_pairing(a, beta) == 0 and a != beta and a != _neg(beta)
        ]
        support = [k for k, x in enumerate(beta) if x]
        kept = [k for k in range(self.dim) if k not in support]
        even_set, odd_set = set(self.even_roots), set(self.odd_roots)
        d_even = sorted({a for a in delta_beta if a in even_set}, reverse=True)
        d_odd = sorted({a for a in delta_beta if a in odd_set}, reverse=True)
        target = self.type.reduced()
        target_rs = RootSystem(target) if target is not None else None
        if target_rs is not None:
            emb = lambda r: self.embed(r, kept)
            t_even = sorted({emb(r) for r in target_rs.even_roots}, reverse=True)
            t_odd = sorted({emb(r) for r in target_rs.odd_roots}, reverse=True)
        else:
            t_even, t_odd = [], []
        matches = (
            t_even == d_even
            and t_odd == d_odd
            and all(not any(a[k] for k in support) for a in delta_beta)
        )
        return DSReduction(self, beta, d_even, d_odd, target, target_rs, tuple(kept), matches)

    def _as_ds_root(self, beta) -> Vector:
        if not self.is_km and len(beta) == 2 and len(beta) != self.dim:
            i, j = beta
            if i == j:
                raise NotIsotropic("index pair needs i != j")
            if i > j:
                i, j = j, i
            return _add(self.eps(i), self.eps(j, -1))
        beta = tuple(int(b) for b in beta)
        if len(beta) != self.dim:
            raise ValueError(f"expected a vector of length {self.dim}")
        if beta not in set(self.isotropic) and _neg(beta) not in set(self.isotropic):
            raise NotIsotropic(f"{beta} is not an isotropic root of {self.type}")
        if not self.is_km and beta not in set(self.isotropic):
            beta = _neg(beta)
        return beta

    def embed(self, v: Sequence, kept: Sequence[int]) -> Vector:
        out = [0] * self.dim
        for k, x in zip(kept, v):
            out[k] = x
        return tuple(out)

    def check_span_nondegenerate(self, beta) -> Tuple[bool, Fraction]:
        red = self.ds_reduction(beta)
        roots = red.even + red.odd
        basis = [roots[i] for i in linalg.independent_subset(roots)]
        gram = [[self.bilinear(a, b) for b in basis] for a in basis]
        d = linalg.det(gram)
        return d != 0, d

    # -- JSON -----------------------------------------------------------------
    def weight_to_json(self, v: Sequence) -> dict:
        v = [str(Fraction(x)) for x in v]
        if self.is_km:
            return {"eps": v[: self.m], "delta": v[self.m:]}
        return {"eps": v}

    def torus_to_json(self, x: Sequence) -> dict:
        x = [str(Fraction(v)) for v in x]
        if self.is_km:
            return {"x": x[: self.m], "y": x[self.m:]}
        return {"x": x}

    def point_from_json(self, d: dict, multiplicative: bool) -> tuple:
        a, b = ("x", "y") if multiplicative else ("eps", "delta")
        first = [Fraction(s) for s in d.get(a, [])]
        second = [Fraction(s) for s in d.get(b, [])]
        if len(first) != self.m or len(second) != self.n:
            raise ValueError(
                f"point needs {self.m} {a!r} and {self.n} {b!r} coordinates for {self.type}"
            )
        pt = tuple(first + second)
        if multiplicative and any(v == 0 for v in pt):
            raise ValueError("torus points have nonzero coordinates")
        return pt

    def root_to_json(self, r: Sequence) -> str:
        """Readable label such as 'eps1-delta2'."""
        parts = []
        for k, c in enumerate(r):
            if not c:
                continue
            name = f"eps{k + 1}" if k < self.m else f"delta{k - self.m + 1}"
            coef = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + coef + name)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def describe(self) -> dict:
        return {
            "type": self.type.to_dict(),
            "label": self.type.label(),
            "basis": [f"eps{i + 1}" for i in range(self.m)] + [f"delta{j + 1}" for j in range(self.n)],
            "gram_diagonal": list(self.gram_diag),
            "even_roots": [self.root_to_json(r) for r in self.even_roots],
            "odd_roots": [self.root_to_json(r) for r in self.odd_roots],
            "isotropic_roots": [self.root_to_json(r) for r in self.isotropic],
            "omega": [self.root_to_json(r) for r in self.omega],
            "weyl_group_order": len(self.weyl_group),
            "weyl_group": self.weyl_group_name(),
            "defect": self.defect,
            "standard_chain": [self.root_to_json(r) for r in self.standard_chain()],
            "weight_lattice": self.weight_lattice,
        }

    def weyl_group_name(self) -> str:
        fam, m, n = self.type.family, self.m, self.n
        if fam in ("p", "q"):
            return f"S{m}"
        if fam in ("gl", "sl"):
            return f"S{m} x S{n}"
        left = f"B{m}" if self.type.m % 2 else f"D{m}"
        return f"{left} x C{n}"


@dataclass
class DSReduction:
    parent: RootSystem
    beta: Vector
    even: List[Vector]
    odd: List[Vector]
    target: Optional[SuperType]
    target_rs: Optional[RootSystem]
    kept: Tuple[int, ...]
    matches_table: bool

    def to_json(self) -> dict:
        rs = self.parent
        return {
            "beta": rs.root_to_json(self.beta),
            "even_roots": [rs.root_to_json(r) for r in self.even],
            "odd_roots": [rs.root_to_json(r) for r in self.odd],
            "target": self.target.to_dict() if self.target else None,
            "target_label": self.target.label() if self.target else None,
            "kept_coordinates": list(self.kept),
            "matches_table": self.matches_table,
        }


_cache: Dict[SuperType, RootSystem] = {}


def build_root_system(t: SuperType | dict | str, m: int = 0, n: int = 0) -> RootSystem:
    if isinstance(t, dict):
        t = SuperType.from_dict(t)
    elif isinstance(t, str):
        t = SuperType(t, m, n)
    rs = _cache.get(t)
    if rs is None:
        rs = _cache[t] = RootSystem(t)
    return rs
