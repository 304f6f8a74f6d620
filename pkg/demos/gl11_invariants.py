"""The smallest interesting case: gl(1|1) acting on the plane.

Functions constant on the line X1 + Y1 = 0 are exactly k + T*k[S, T] with
T = X1 + Y1.  We classify low-degree monomials in (S, T) = (X1, X1 + Y1),
then watch a singleton on the line close up to the whole line.
"""
from weylgroupoid import Ideal, Setting, check_membership, s_closure, t_element
from weylgroupoid.sgeom import ClosedSet, point_ideal

S = Setting.of("gl", 1, 1)
ring = S.ring
s, u = ring.var("X1"), ring.parse("X1 + Y1")

print("T =", t_element(S).poly)
for a in range(3):
    for b in range(3 - a):
        f = s ** a * u ** b
        res = check_membership(f, S)
        print(f"S^{a} T^{b}: member={res.member}" + ("" if res.member else f"  ({res.witness})"))

V = ClosedSet.from_ideal(point_ideal((1, -1), S), S)
closure = s_closure(V)
print("closure of {(1, -1)}:", [str(g) for g in closure.ideal.generators])
