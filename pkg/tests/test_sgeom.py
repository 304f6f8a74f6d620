import random
from fractions import Fraction

import pytest

from weylgroupoid import linalg
from weylgroupoid.groebner import Ideal, contains, radical_contains, same_zero_set, zero_set_contains
from weylgroupoid.groupoid import orbit_description, sample_orbit_point
from weylgroupoid.invariants import Setting, UnsupportedSetting, monomials_up_to
from weylgroupoid.poly import Polynomial, evaluate
from weylgroupoid.sgeom import (
    Z_SIGMA, ClosedSet, atyp_of_set, chain_coordinates, is_superalgebraic, is_w_invariant_set,
    level_data, orbit_closure_ideal, point_ideal, points_ideal, project_point, s_closure,
    symmetrize_report, tau_stability_failures, tau_stable, w_orbit_ideal, w_orbit_points,
)

F = Fraction
GL11 = Setting.of("gl", 1, 1)
GL21 = Setting.of("gl", 2, 1)
GL21T = Setting.of("gl", 2, 1, "multiplicative")
GL22 = Setting.of("gl", 2, 2)


def closed(I, S):
    return ClosedSet.from_ideal(I, S)


def finite_orbit_set(pt, S):
    return closed(points_ideal(w_orbit_points(pt, S), S), S)


# -- independent oracle: low-degree vanishing ideal from sampled orbit points ---------

def interpolated_ideal(pt, S, degree, samples, seed=0):
    rng = random.Random(seed)
    desc = orbit_description(pt, S)
    pts = [sample_orbit_point(desc, rng, t_range=7) for _ in range(samples)]
    monos = monomials_up_to(S.ring, degree)
    rows = []
    for p in pts:
        row = []
        for m in monos:
            v = Fraction(1)
            for x, e in zip(p, m):
                v *= x ** e
            row.append(v)
        rows.append(row)
    gens = []
    for vec in linalg.nullspace(rows, len(monos)):
        gens.append(Polynomial(S.ring, {m: c for m, c in zip(monos, vec) if c}))
    return Ideal(S.ring, gens), pts


@pytest.mark.parametrize("S,pt,degree,samples", [
    (GL21, (3, 1, -1), 3, 60),
    (GL21, (2, 2, -2), 3, 60),
    (GL21T, (3, 2, 2), 2, 80),
    (GL22, (1, 2, -1, 5), 3, 120),
    (GL22, (0, 0, 0, 0), 3, 120),
], ids=["gl21-a", "gl21-b", "gl21-torus", "gl22-atyp1", "gl22-zero"])
def test_orbit_closure_matches_interpolation(S, pt, degree, samples):
    I = orbit_closure_ideal(pt, S)
    J, pts = interpolated_ideal(pt, S, degree, samples)
    for g in I.generators:
        assert all(evaluate(g, p) == 0 for p in pts)
    for g in J.generators:
        assert radical_contains(I, g)
    assert same_zero_set(I, J)


def test_orbit_closure_typical_is_the_w_orbit():
    I = orbit_closure_ideal((1, 2, 5, 7), GL22)
    assert same_zero_set(I, points_ideal(w_orbit_points((1, 2, 5, 7), GL22), GL22))


# -- S-closure ------------------------------------------------------------------------

def test_gl11_singleton_closes_to_line():
    res = s_closure(closed(point_ideal((1, -1), GL11), GL11))
    assert res.atyp == 1
    assert same_zero_set(res.ideal, Ideal(GL11.ring, ["X1 + Y1"]))
    assert not is_superalgebraic(closed(point_ideal((1, -1), GL11), GL11))
    assert is_superalgebraic(closed(Ideal(GL11.ring, ["X1 + Y1"]), GL11))


def test_sigma_convention_reading():
    # z = X_{m-i+1} keeps the eliminated line instead of the diagonal
    res = s_closure(closed(point_ideal((1, -1), GL11), GL11), Z_SIGMA)
    assert same_zero_set(res.ideal, Ideal(GL11.ring, ["X1^2 - X1", "X1*Y1 + X1"]))


def test_gl11_torus():
    T = Setting.of("gl", 1, 1, "multiplicative")
    res = s_closure(closed(point_ideal((2, 2), T), T))
    assert same_zero_set(res.ideal, Ideal(T.ring, ["x1 - y1"]))


@pytest.mark.parametrize("S,pt", [(GL11, (1, 0)), (GL21, (3, 1, 1)), (GL22, (1, 2, 3, 5)),
                                  (GL21T, (2, 3, 5))], ids=str)
def test_typical_orbits_are_fixed(S, pt):
    V = finite_orbit_set(pt, S)
    res = s_closure(V)
    assert res.atyp == 0 and same_zero_set(res.ideal, V.ideal)


@pytest.mark.parametrize("S,pt", [(GL21, (3, 1, -1)), (GL21T, (3, 2, 2)), (GL22, (1, 2, -1, 5)),
                                  (GL22, (0, 0, 0, 0)), (GL22, (1, 1, -1, -1)),
                                  (Setting.of("osp", 3, 2), (1, 1)),
                                  (Setting.of("osp", 3, 2, "multiplicative"), (2, 2))]
                         + [(GL11, (a, b)) for a in (-1, 0, 2) for b in (-2, 1)], ids=str)
def test_closure_of_finite_orbit_is_orbit_closure(S, pt):
    res = s_closure(finite_orbit_set(pt, S))
    assert same_zero_set(res.ideal, orbit_closure_ideal(pt, S))
    assert tau_stable(res.ideal, S)


def test_idempotent_on_random_ideals():
    from weylgroupoid.acceptance import random_w_invariant_ideal

    rng = random.Random(99)
    for _ in range(4):
        I = random_w_invariant_ideal(GL21, rng)
        V = closed(I, GL21)
        res = s_closure(V)
        assert zero_set_contains(I, res.ideal)
        again = s_closure(closed(res.ideal, GL21))
        assert same_zero_set(again.ideal, res.ideal)


def test_tau_stability_levels_defect_one():
    V = finite_orbit_set((3, 1, -1), GL21)
    res = s_closure(V)
    assert all(not tau_stability_failures(I, GL21) for I in res.levels[1:])


def test_tau_stability_individual_levels_can_fail_at_defect_two():
    res = s_closure(closed(point_ideal((0, 0, 0, 0), GL22), GL22))
    assert tau_stability_failures(res.levels[1], GL22)
    assert not tau_stability_failures(res.levels[2], GL22)
    assert not tau_stability_failures(res.ideal, GL22)


def test_level_data_pieces():
    V = finite_orbit_set((3, 1, -1), GL21)
    d = level_data(V, 1)
    assert d.images >= 1
    assert all(g.degree_in(k) == 0 for g in d.K.generators for k in chain_coordinates(1, GL21))
    assert atyp_of_set(V) == 1


def test_projection_helpers():
    assert chain_coordinates(2, GL22) == [1, 3, 0, 2]
    assert project_point((1, 2, 3, 4), 1, GL22) == (1, 0, 3, 0)


def test_w_invariance_checks():
    I = Ideal(GL21.ring, ["X1"])
    assert not is_w_invariant_set(I, GL21)
    with pytest.raises(ValueError):
        s_closure(closed(I, GL21))
    assert is_w_invariant_set(w_orbit_ideal([GL21.ring.parse("X1")], GL21), GL21)


def test_only_km_types():
    Q = Setting.of("q", 0, 3)
    with pytest.raises(UnsupportedSetting):
        s_closure(closed(point_ideal((0, 0, 0), Q), Q))


def test_symmetrize_report_flags():
    I = Ideal(GL11.ring, ["X1 + Y1"])
    rep = symmetrize_report(I, GL11)
    assert rep == [{"generator": "X1 + Y1", "symmetrized": "X1 + Y1", "supersymmetric": True}]
    rep = symmetrize_report(orbit_closure_ideal((3, 1, -1), GL21), GL21)
    assert all(set(r) == {"generator", "symmetrized", "supersymmetric"} for r in rep)


@pytest.mark.parametrize("S,pt", [(GL22, (1, 1, -1, -1)), (GL22, (0, 2, 0, 3)),
                                  (Setting.of("gl", 2, 2, "multiplicative"), (2, 3, 2, 3)),
                                  (Setting.of("osp", 3, 2), (1, 1))], ids=str)
def test_level_data_is_w_equivariant(S, pt):
    from weylgroupoid.sgeom import l_ideal

    V = finite_orbit_set(pt, S)
    rs = S.rs
    for q in range(1, rs.defect + 1):
        A = rs.standard_chain()[:q]
        _, _, L = l_ideal(V, A)
        for w in rs.weyl_group:
            wA = [rs.act_weight(w, b) for b in A]
            _, _, Lw = l_ideal(V, wA)
            assert same_zero_set(L.map(S.action(w).act), Lw)
