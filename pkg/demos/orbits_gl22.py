"""Groupoid orbits in gl(2|2): dimension equals atypicality.

The origin is doubly atypical, so its orbit is a union of planes; a point
with one atypical pair sweeps out lines.  Each equivalence answer comes with
a witness path that is replayed before it is reported.
"""
import random
from fractions import Fraction

from weylgroupoid import Setting, atyp, orbit_closure_ideal, orbit_contains, orbit_description
from weylgroupoid.groupoid import replay, sample_orbit_point

rng = random.Random(7)
for space in ("additive", "multiplicative"):
    S = Setting.of("gl", 2, 2, space)
    base = (0, 0, 0, 0) if space == "additive" else (2, 3, 2, 3)
    desc = orbit_description(base, S)
    print(f"[{space}] base {base}: atyp {atyp(base, S)}, F = {[S.rs.root_to_json(a) for a in desc.F]}")
    mu = sample_orbit_point(desc, rng)
    wit = orbit_contains(base, mu, S)
    print("  sampled", tuple(str(x) for x in mu), "witness t =", [str(t) for t in wit.ts])
    assert replay(wit.path(), base, S) == mu
    ideal = orbit_closure_ideal(base, S)
    print("  orbit closure:", [str(g) for g in ideal.generators])

S = Setting.of("gl", 2, 2)
lam = (1, 2, -1, 5)
print("typical-direction move:", orbit_contains(lam, (1, 2, -1, Fraction(11, 2)), S))
