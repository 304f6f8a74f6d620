"""Exact sparse polynomials and Laurent polynomials over the rationals.

A :class:`Ring` fixes the variable names and whether negative exponents are
allowed.  A :class:`Polynomial` is an immutable map from exponent tuples to
nonzero :class:`~fractions.Fraction` coefficients.  Exponent tuples are dense
(one slot per ring variable), which keeps hashing and order keys cheap.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as _cartesian
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coeff = Union[int, Fraction]


class RingMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class SubstitutionError(ValueError):
    pass


class Ring:
    """Variable names plus affine/Laurent mode."""

    __slots__ = ("names", "laurent", "_index", "_hash")

    def __init__(self, names: Iterable[str], laurent: bool = False):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.laurent = bool(laurent)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._hash = hash((self.names, self.laurent))

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def mode(self) -> str:
        return "laurent" if self.laurent else "affine"

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.laurent == other.laurent
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({list(self.names)}, {self.mode})"

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.arity:
                raise IndexError(name)
            return name
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self!r}") from None

    def var(self, name: Union[str, int]) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.arity
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)}, _trusted=True)

    def gens(self):
        return [self.var(i) for i in range(self.arity)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {}, _trusted=True)

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Coeff) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c}, _trusted=True)

    def monomial(self, exps: Sequence[int], coeff: Coeff = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def extend(self, names: Iterable[str], laurent: bool | None = None) -> "Ring":
        return Ring(self.names + tuple(names), self.laurent if laurent is None else laurent)

    def with_mode(self, laurent: bool) -> "Ring":
        return Ring(self.names, laurent)

    def to_dict(self) -> dict:
        return {"variables": list(self.names), "mode": self.mode}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Ring":
        mode = d.get("mode", "affine")
        if mode not in ("affine", "laurent"):
            raise ValueError(f"unknown ring mode {mode!r}")
        return cls(d["variables"], laurent=(mode == "laurent"))

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


def _grlex_key(m: Monomial):
    return (sum(m), m)


class Polynomial:
    """Immutable sparse polynomial; terms map exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coeff] | None = None, *, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean: Dict[Monomial, Fraction] = {}
        n = ring.arity
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {ring!r}")
            if not ring.laurent and any(e < 0 for e in m):
                raise ValueError(f"negative exponent in affine ring: {m}")
            c = Fraction(c)
            if c:
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self.terms = clean

    # -- basic structure -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.arity, Fraction(0))

    def is_unit_term(self) -> bool:
        """Nonzero scalar times a monomial (a unit in Laurent mode)."""
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var) -> int:
        i = self.ring.index(var)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def min_degree_in(self, var) -> int:
        i = self.ring.index(var)
        return min(m[i] for m in self.terms) if self.terms else 0

    def variables(self):
        """Indices of variables that occur."""
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()}, _trusted=True)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, Polynomial):
            return divide_exact(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.ring.laurent and self.is_unit_term():
                (m, c), = self.terms.items()
                return Polynomial(self.ring, {tuple(-e for e in m): 1 / c}, _trusted=True) ** (-k)
            raise ValueError("negative power of a non-unit")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_monomial(self, shift: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial with exponent vector ``shift``."""
        out = {tuple(a + b for a, b in zip(m, shift)): c for m, c in self.terms.items()}
        return Polynomial(self.ring, out)

    def monic(self, order=None) -> "Polynomial":
        if not self.terms:
            return self
        key = order.key if order is not None else _grlex_key
        lead = max(self.terms, key=key)
        return self * (1 / self.terms[lead])

    # -- evaluation, substitution, calculus -------------------------------
    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)

    def substitute(self, images: Mapping, target: Ring | None = None) -> "Polynomial":
        return Substitution(self.ring, images, target)(self)

    def derivative(self, var) -> "Polynomial":
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Polynomial(self.ring, out)

    def coefficients_in(self, var) -> Dict[int, "Polynomial"]:
        """Split as sum_k var^k * c_k; returns {k: c_k} with c_k free of var."""
        i = self.ring.index(var)
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            k = m[i]
            mm = m[:i] + (0,) + m[i + 1:]
            parts.setdefault(k, {})[mm] = c
        return {k: Polynomial(self.ring, t, _trusted=True) for k, t in parts.items()}

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Re-express in ``ring`` by variable name (missing names must not occur)."""
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring.index(name) if name in ring._index else None)
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.arity
            for i, k in enumerate(m):
                if k:
                    if idx[i] is None:
                        raise RingMismatch(f"variable {self.ring.names[i]} not in {ring!r}")
                    e[idx[i]] = k
            out[tuple(e)] = c
        return Polynomial(ring, out)


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != f.ring.arity:
        raise ValueError(f"point has {len(point)} coordinates, ring has {f.ring.arity}")
    pt = [Fraction(v) for v in point]
    total = Fraction(0)
    for m, c in f.terms.items():
        term = c
        for v, e in zip(pt, m):
            if e:
                if e < 0 and v == 0:
                    raise ZeroDivisionError("Laurent monomial evaluated at a zero coordinate")
                term *= v ** e
        total += term
    return total


class Substitution:
    """Simultaneous substitution ``var -> image``.

    Unmapped variables go to the same-named variable of ``target`` (so a
    substitution may drop or add variables).  In Laurent mode a variable that
    occurs with a negative exponent must map to a unit (one term).
    """

    def __init__(self, source: Ring, images: Mapping, target: Ring | None = None):
        self.source = source
        self.target = target if target is not None else source
        imgs = {}
        for k, v in images.items():
            i = source.index(k)
            if isinstance(v, (int, Fraction)):
                v = self.target.const(v)
            elif isinstance(v, str):
                v = parse_polynomial(v, self.target)
            if v.ring != self.target:
                raise RingMismatch(f"image ring {v.ring!r} differs from target {self.target!r}")
            imgs[i] = v
        for i, name in enumerate(source.names):
            if i not in imgs:
                if name not in self.target._index:
                    imgs[i] = None  # must not occur in inputs
                else:
                    imgs[i] = self.target.var(name)
        self.images = imgs

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.ring != self.source:
            raise RingMismatch(f"{f.ring!r} vs {self.source!r}")
        cache: Dict[Tuple[int, int], Polynomial] = {}
        tgt = self.target

        def power(i, e):
            key = (i, e)
            p = cache.get(key)
            if p is None:
                img = self.images[i]
                if img is None:
                    raise SubstitutionError(f"variable {self.source.names[i]} has no image")
                if e < 0:
                    if not tgt.laurent:
                        raise SubstitutionError("negative exponent into an affine target")
                    if not img.is_unit_term():
                        raise SubstitutionError(
                            f"{self.source.names[i]} occurs inverted but maps to non-unit {img}"
                        )
                p = img ** e
                cache[key] = p
            return p

        out: Dict[Monomial, Fraction] = {}
        for m, c in f.terms.items():
            term = tgt.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for mm, cc in term.terms.items():
                s = out.get(mm, 0) + cc
                if s:
                    out[mm] = s
                else:
                    del out[mm]
        return Polynomial(tgt, out, _trusted=True)


class GroupElement:
    """Signed permutation with per-variable inversion flags.

    Acts on polynomials by ``Z_i -> signs[i] * Z_{perm[i]} ** (-1 if inverts[i] else 1)``,
    which is the pullback ``(w f)(x) = f(w^{-1} x)`` for the matching action on points.
    """

    __slots__ = ("perm", "signs", "inverts")

    def __init__(self, perm: Sequence[int], signs: Sequence[int] | None = None,
                 inverts: Sequence[bool] | None = None):
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation: {perm}")
        self.perm = tuple(perm)
        self.signs = tuple(signs) if signs is not None else (1,) * n
        self.inverts = tuple(bool(b) for b in inverts) if inverts is not None else (False,) * n
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(range(n))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> "GroupElement":
        p = list(range(n))
        p[i], p[j] = p[j], p[i]
        return cls(p)

    def _key(self):
        return (self.perm, self.signs, self.inverts)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        return f"GroupElement(perm={self.perm}, signs={self.signs}, inverts={self.inverts})"

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Composition: (self * other) acts as ``self(other(f))``."""
        n = len(self.perm)
        perm, signs, inv = [0] * n, [1] * n, [False] * n
        # other sends Z_i -> s_i Z_{p_i}^{+-1}; then self rewrites Z_{p_i}.
        for i in range(n):
            j = other.perm[i]
            perm[i] = self.perm[j]
            inv[i] = other.inverts[i] != self.inverts[j]
            s = self.signs[j]
            # a sign sitting under an inversion survives as (+-1)^{-1} = +-1
            signs[i] = other.signs[i] * s
        return GroupElement(perm, signs, inv)

    def inverse(self) -> "GroupElement":
        n = len(self.perm)
        perm, signs, inv = [0] * n, [1] * n, [False] * n
        for i in range(n):
            j = self.perm[i]
            perm[j] = i
            signs[j] = self.signs[i]
            inv[j] = self.inverts[i]
        return GroupElement(perm, signs, inv)

    def act(self, f: Polynomial) -> Polynomial:
        ring = f.ring
        if len(self.perm) != ring.arity:
            raise RingMismatch("group element and ring have different arity")
        if any(self.inverts) and not ring.laurent:
            raise ValueError("variable inversion needs a Laurent ring")
        out = {}
        for m, c in f.terms.items():
            e = [0] * ring.arity
            sign = 1
            for i, k in enumerate(m):
                if k:
                    e[self.perm[i]] = -k if self.inverts[i] else k
                    if self.signs[i] < 0 and k % 2:
                        sign = -sign
            out[tuple(e)] = c * sign
        return Polynomial(ring, out, _trusted=True)

    __call__ = act


def generate_group(generators: Sequence[GroupElement], n: int | None = None):
    """All elements of the group generated by ``generators``, sorted."""
    if not generators:
        if n is None:
            raise ValueError("need n when there are no generators")
        return [GroupElement.identity(n)]
    ident = GroupElement.identity(len(generators[0].perm))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def reynolds(f: Polynomial, group: Sequence[GroupElement]) -> Polynomial:
    """Average of ``w.f`` over a finite group given by its full element list."""
    group = list(group)
    if not group:
        raise ValueError("empty group")
    total = f.ring.zero()
    for w in group:
        total = total + w.act(f)
    return total * Fraction(1, len(group))


# -- division ---------------------------------------------------------------

def monomial_content(f: Polynomial) -> Monomial:
    """Componentwise minimum exponent (the largest monomial dividing f)."""
    if not f.terms:
        return (0,) * f.ring.arity
    it = iter(f.terms)
    low = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < low[i]:
                low[i] = e
    return tuple(low)


def _divide_affine(f: Dict[Monomial, Fraction], g: Dict[Monomial, Fraction]):
    key = _grlex_key
    lg = max(g, key=key)
    cg = g[lg]
    rest = [(m, c) for m, c in g.items() if m != lg]
    p = dict(f)
    q: Dict[Monomial, Fraction] = {}
    while p:
        lp = max(p, key=key)
        shift = tuple(a - b for a, b in zip(lp, lg))
        if any(s < 0 for s in shift):
            return None
        c = p.pop(lp) / cg
        q[shift] = c
        for m, d in rest:
            mm = tuple(a + b for a, b in zip(m, shift))
            s = p.get(mm, 0) - c * d
            if s:
                p[mm] = s
            else:
                p.pop(mm, None)
    return q


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with f == q*g, or raise NotDivisible.

    In Laurent mode monomial units are cleared from both sides first, so the
    test is divisibility in the Laurent ring.
    """
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring!r} vs {g.ring!r}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    ring = f.ring
    if ring.laurent:
        sf = monomial_content(f)
        sg = monomial_content(g)
        F = {tuple(a - b for a, b in zip(m, sf)): c for m, c in f.terms.items()}
        G = {tuple(a - b for a, b in zip(m, sg)): c for m, c in g.terms.items()}
        q = _divide_affine(F, G)
        if q is None:
            raise NotDivisible(f"{g} does not divide {f}")
        shift = tuple(a - b for a, b in zip(sf, sg))
        return Polynomial(ring, q, _trusted=True).scale_monomial(shift)
    q = _divide_affine(f.terms, g.terms)
    if q is None:
        raise NotDivisible(f"{g} does not divide {f}")
    return Polynomial(ring, q, _trusted=True)


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        divide_exact(f, g)
    except NotDivisible:
        return False
    return True


# -- text format --------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    names = f.ring.names
    pieces = []
    for m, c in f.sorted_terms():
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        pieces.append(("-" if c < 0 else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class PolynomialSyntaxError(ValueError):
    pass


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise PolynomialSyntaxError(f"bad input at {pos}: {text[pos:]!r}")
        num, name, op = mt.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        else:
            if op not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {op!r}")
            toks.append(("op", op))
        pos = mt.end()
    return toks


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse sums/products/powers of rationals and ring variables.

    Accepts the canonical output of :func:`format_polynomial` and, more
    generally, parenthesised expressions such as ``(X1+Y1)*(X2+Y1)^2``.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise PolynomialSyntaxError(f"expected {value or kind} in {text!r}")
        pos += 1
        return tok

    def expr():
        if peek() == ("op", "-"):
            take()
            acc = -term()
        else:
            if peek() == ("op", "+"):
                take()
            acc = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() == ("op", "*"):
            take()
            acc = acc * factor()
        return acc

    def integer_exponent():
        neg = False
        if peek() == ("op", "("):
            take()
            e = integer_exponent()
            take("op", ")")
            return e
        if peek() == ("op", "-"):
            take()
            neg = True
        e = take("num")[1]
        return -e if neg else e

    def factor():
        if peek() == ("op", "-"):
            take()
            return -factor()
        b = base()
        if peek() == ("op", "^"):
            take()
            e = integer_exponent()
            if e < 0 and not ring.laurent:
                raise PolynomialSyntaxError("negative exponent in an affine ring")
            return b ** e
        return b

    def base():
        kind, val = peek()
        if kind == "num":
            take()
            if peek() == ("op", "/"):
                take()
                den = take("num")[1]
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator")
                return ring.const(Fraction(val, den))
            return ring.const(val)
        if kind == "name":
            take()
            try:
                return ring.var(val)
            except KeyError as exc:
                raise PolynomialSyntaxError(str(exc)) from None
        if (kind, val) == ("op", "("):
            take()
            e = expr()
            take("op", ")")
            return e
        raise PolynomialSyntaxError(f"unexpected token {val!r} in {text!r}")

    if not toks:
        raise PolynomialSyntaxError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise PolynomialSyntaxError(f"trailing input in {text!r}")
    return result


def random_polynomial(ring: Ring, degree: int, rng, *, density: float = 0.5,
                      coeff_range: int = 3, min_exponent: int | None = None) -> Polynomial:
    """Random polynomial with small integer coefficients.

    Affine: monomials of total degree <= degree.  Laurent: exponents in
    [min_exponent, degree] with L1 norm <= degree.
    """
    lo = 0 if not ring.laurent else (-degree if min_exponent is None else min_exponent)
    terms = {}
    for m in _cartesian(range(lo, degree + 1), repeat=ring.arity):
        if sum(abs(e) for e in m) > degree:
            continue
        if rng.random() < density:
            c = rng.randint(-coeff_range, coeff_range)
            if c:
                terms[m] = c
    return Polynomial(ring, terms)
