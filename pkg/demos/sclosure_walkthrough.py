"""Level-by-level S-closure of a finite W-orbit in gl(2|1).

For each prefix of the standard iso-chain we intersect with the hyperplanes,
eliminate the touched coordinates, put back the z equations and take the
W-union.  The result agrees with the implicitized orbit closure.
"""
from weylgroupoid import Setting, orbit_closure_ideal, s_closure, same_zero_set
from weylgroupoid.sgeom import ClosedSet, level_data, points_ideal, tau_stable, w_orbit_points

for space, pt in (("additive", (3, 1, -1)), ("multiplicative", (3, 2, 2))):
    S = Setting.of("gl", 2, 1, space)
    V = ClosedSet.from_ideal(points_ideal(w_orbit_points(pt, S), S), S)
    d = level_data(V, 1)
    print(f"[{space}] W-orbit of {pt}")
    print("  J =", [str(g) for g in d.J.generators])
    print("  K =", [str(g) for g in d.K.generators])
    print("  L =", [str(g) for g in d.L.generators], f"({d.images} distinct W-images)")
    res = s_closure(V, symmetrize=True)
    print("  V^S =", [str(g) for g in res.ideal.generators])
    print("  equals orbit closure:", same_zero_set(res.ideal, orbit_closure_ideal(pt, S)))
    print("  tau-stable:", tau_stable(res.ideal, S))
    for r in res.symmetrized:
        print("   ", r["generator"], "->", r["symmetrized"], "supersymmetric" if r["supersymmetric"] else "flagged")
