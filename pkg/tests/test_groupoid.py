import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from weylgroupoid.groupoid import (
    GroupoidGenerator, NotDefinedAt, E_set, apply_generator, atyp, equivalent, in_domain,
    maximal_isoset_at, orbit_contains, orbit_description, replay, sample_orbit_point,
    stabilizer_move,
)
from weylgroupoid.invariants import Setting, supersymmetric_basis
from weylgroupoid.poly import evaluate

F = Fraction
GL21 = Setting.of("gl", 2, 1)
GL22 = Setting.of("gl", 2, 2)
GL22T = Setting.of("gl", 2, 2, "multiplicative")


def labels(S, roots):
    return [S.rs.root_to_json(r) for r in roots]


def test_atyp_examples():
    assert atyp((3, 1, -1), GL21) == 1
    assert atyp((0, 0, 0, 0), GL22) == 2
    assert atyp((2, F(-1, 2), 5), Setting.of("q", 0, 3, "multiplicative")) == 0


def test_maximal_isoset_examples():
    Fs, E = maximal_isoset_at((3, 1, -1), GL21)
    assert labels(GL21, Fs) == ["eps2-delta1"]
    assert sorted(labels(GL21, E)) == ["-eps2+delta1", "eps2-delta1"]
    Fs, E = maximal_isoset_at((0, 0, 0, 0), GL22)
    assert list(Fs) == GL22.rs.standard_chain()[::-1] or set(Fs) == set(GL22.rs.standard_chain())
    assert set(E) == set(GL22.rs.isotropic)
    assert maximal_isoset_at((1, 2, 5, 7), GL22) == ((), [])


def test_apply_generator_examples():
    G = Setting.of("gl", 1, 1)
    beta = G.rs.omega[0]
    assert apply_generator(GroupoidGenerator.tau(beta, 2), (1, -1), G) == (3, -3)
    with pytest.raises(NotDefinedAt):
        apply_generator(GroupoidGenerator.tau(beta, 2), (1, 0), G)
    Q = Setting.of("q", 0, 3, "multiplicative")
    alpha = (1, -1, 0)
    assert apply_generator(GroupoidGenerator.tau(alpha, 3), (2, F(1, 2), 7), Q) == (6, F(1, 6), 7)


def test_moves_stay_in_domain():
    rng = random.Random(1)
    for S in (GL22, GL22T):
        for _ in range(20):
            pt = tuple(F(rng.choice([1, 2, -1, 3])) for _ in range(4))
            for a in E_set(pt, S):
                t = F(rng.randint(1, 5))
                assert in_domain(apply_generator(GroupoidGenerator.tau(a, t), pt, S), a, S)


def test_orbit_description_examples():
    G = Setting.of("gl", 1, 1)
    d = orbit_description((2, -2), G)
    assert d.dim == 1 and d.point(G.rs.weyl_group[0], [F(5)]) == (7, -7)
    assert orbit_description((1, 2, 5, 7), GL22).dim == 0
    assert orbit_description((0, 0, 0, 0), GL22).dim == 2


def test_orbit_contains_examples():
    G = Setting.of("gl", 1, 1)
    wit = orbit_contains((2, -2), (2, -2), G)
    assert wit is not None and all(t == 0 for t in wit.ts)
    wit = orbit_contains((2, -2), (F(-1, 3), F(1, 3)), G)
    assert wit.ts == (F(-7, 3),)
    assert replay(wit.path(), (2, -2), G) == (F(-1, 3), F(1, 3))
    lam = (1, 2, 5)
    beta = GL21.rs.omega[0]
    mu = tuple(x + b for x, b in zip(lam, beta))
    assert orbit_contains(lam, mu, GL21) is None
    assert not equivalent((1, 2, 5, 7), (2, 1, 5, 8), GL22)
    assert equivalent((1, 2, 5, 7), (2, 1, 7, 5), GL22)


def grid(S):
    if S.multiplicative:
        vals = [F(1), F(2), F(-1), F(1, 2)]
    else:
        vals = [F(-1), F(0), F(1), F(2)]
    return list(product(vals, repeat=S.rs.dim))


@pytest.mark.parametrize("S", [GL21, GL22, GL22T, Setting.of("osp", 3, 2), Setting.of("q", 0, 3),
                               Setting.of("p", 0, 4, "multiplicative")], ids=str)
def test_dim_equals_atyp_on_grid(S):
    pts = grid(S)
    random.Random(2).shuffle(pts)
    for pt in pts[:100]:
        Fs, _ = maximal_isoset_at(pt, S)
        assert len(Fs) == atyp(pt, S)


@pytest.mark.parametrize("S", [GL21, GL22, GL22T], ids=str)
def test_invariants_constant_on_witness_paths(S):
    rng = random.Random(4)
    basis = supersymmetric_basis(S, 2)
    atypical = [p for p in grid(S) if atyp(p, S)]
    for lam in atypical[:15]:
        mu = sample_orbit_point(orbit_description(lam, S), rng)
        wit = orbit_contains(lam, mu, S)
        assert wit is not None
        end = replay(wit.path(), lam, S)
        assert end == mu
        for f in basis:
            assert evaluate(f, lam) == evaluate(f, end)


@given(seed=st.integers(0, 10 ** 6))
def test_one_move_keeps_the_orbit(seed):
    rng = random.Random(seed)
    S = rng.choice([GL22, GL22T])
    pts = [p for p in grid(S) if atyp(p, S)]
    lam = rng.choice(pts)
    alpha = rng.choice(E_set(lam, S))
    mu = apply_generator(GroupoidGenerator.tau(alpha, F(rng.randint(1, 4))), lam, S)
    assert equivalent(lam, mu, S)
    assert orbit_description(mu, S).dim == orbit_description(lam, S).dim


@pytest.mark.parametrize("S", [GL22, GL22T, Setting.of("osp", 5, 4)], ids=str)
def test_stabilizer_move(S):
    pts = [p for p in grid(S)] if S.rs.dim == 4 else [(0, 0, 0, 0), (1, 0, 1, 0), (2, 1, 2, 1)]
    checked = 0
    for lam in pts[:60]:
        Fs, E = maximal_isoset_at(lam, S)
        for beta in E:
            if beta in Fs:
                continue
            u = stabilizer_move(lam, beta, S)
            assert u is not None
            assert S.act_point(u, lam) == tuple(F(x) for x in lam)
            img = S.rs.act_weight(u, beta)
            assert img in set(Fs) | {tuple(-x for x in a) for a in Fs}
            checked += 1
    assert checked


def test_torus_rejects_zero():
    with pytest.raises(ValueError):
        atyp((0, 1, 1, 1), GL22T)
