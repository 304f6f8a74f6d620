from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from weylgroupoid.rootdata import InvalidType, SuperType, build_root_system
from weylgroupoid.poly import Ring, Substitution


def expected_counts(fam, m, n):
    """Textbook counts: (even, odd, |W|, defect, |Omega|)."""
    if fam == "gl":
        return m * (m - 1) + n * (n - 1), 2 * m * n, factorial(m) * factorial(n), min(m, n), m * n
    if fam == "osp":
        k, l = m // 2, n // 2
        cw = 2 ** l * factorial(l)
        if m % 2:
            return 2 * k * k + 2 * l * l, 4 * k * l + 2 * l, 2 ** k * factorial(k) * cw, min(k, l), 2 * k * l
        bw = 2 ** (k - 1) * factorial(k) if k else 1
        return 2 * k * (k - 1) + 2 * l * l, 4 * k * l, bw * cw, min(k, l), 2 * k * l
    if fam == "q":
        return n * (n - 1), n * (n - 1), factorial(n), n // 2, n * (n - 1) // 2
    if fam == "p":
        return n * (n - 1), n * (n + 1) // 2 + n * (n - 1) // 2, factorial(n), n // 2, n * (n - 1) // 2


TYPES = [("gl", 1, 1), ("gl", 2, 1), ("gl", 2, 2), ("gl", 3, 2), ("osp", 3, 2), ("osp", 5, 4),
         ("osp", 4, 2), ("osp", 5, 2), ("osp", 2, 2), ("q", 0, 3), ("q", 0, 4), ("p", 0, 3), ("p", 0, 4)]


@pytest.mark.parametrize("fam,m,n", TYPES)
def test_counts(fam, m, n):
    rs = build_root_system(fam, m, n)
    even, odd, w, d, om = expected_counts(fam, m, n)
    assert len(rs.even_roots) == even
    assert len(rs.odd_roots) == odd
    assert len(rs.weyl_group) == w
    assert rs.defect == d
    assert len(rs.omega) == om


@pytest.mark.parametrize("fam,m,n", TYPES)
def test_weyl_group_permutes_roots(fam, m, n):
    rs = build_root_system(fam, m, n)
    roots = set(rs.roots)
    for w in rs.weyl_group:
        assert {rs.act_weight(w, r) for r in rs.roots} == roots
        for a in rs.roots[:4]:
            for b in rs.roots[:4]:
                assert rs.bilinear(rs.act_weight(w, a), rs.act_weight(w, b)) == rs.bilinear(a, b)


@pytest.mark.parametrize("fam,m,n", [t for t in TYPES if t[0] in ("gl", "osp")])
def test_isotropic_roots_are_odd_and_null(fam, m, n):
    rs = build_root_system(fam, m, n)
    for a in rs.isotropic:
        assert rs.bilinear(a, a) == 0 and a in rs.odd_roots
    chain = rs.standard_chain()
    assert len(chain) == rs.defect and rs.is_isoset(chain)


def test_standard_chain_shapes():
    gl = build_root_system("gl", 3, 2)
    assert [gl.root_to_json(b) for b in gl.standard_chain()] == ["eps3-delta2", "eps2-delta1"]
    q = build_root_system("q", 0, 4)
    assert [q.root_to_json(b) for b in q.standard_chain()] == ["eps3-eps4", "eps1-eps2"]


def test_bar_pairing():
    rs = build_root_system("q", 0, 3)
    a = rs.positive_even[0]
    assert rs.bar(a) == tuple(abs(x) for x in a)
    for x in rs.positive_even:
        for y in rs.positive_even:
            assert rs.iso_pairing(x, y) == rs.bilinear(x, rs.bar(y))


@pytest.mark.parametrize("src,datum,target", [
    (("gl", 3, 2), None, ("gl", 2, 1)),
    (("gl", 2, 1), None, ("gl", 1, 0)),
    (("osp", 5, 4), None, ("osp", 3, 2)),
    (("osp", 4, 2), None, ("osp", 2, 0)),
    (("q", 0, 4), (2, 3), ("q", 0, 2)),
    (("p", 0, 4), (2, 3), ("p", 0, 2)),
])
def test_ds_table(src, datum, target):
    rs = build_root_system(*src)
    red = rs.ds_reduction(datum if datum is not None else rs.standard_chain()[0])
    assert red.matches_table
    assert red.target == SuperType(*target)
    t = build_root_system(*target)
    assert len(red.even) == len(t.even_roots) and len(red.odd) == len(t.odd_roots)


def test_span_nondegeneracy():
    # exact determinants of the Gram matrix on the span of the reduced roots
    for (m, n), det in [((2, 2), 0), ((3, 1), 2), ((1, 1), 1)]:
        rs = build_root_system("gl", m, n)
        ok, d = rs.check_span_nondegenerate(rs.standard_chain()[0])
        assert d == det and ok == (det != 0)


@pytest.mark.parametrize("fam,m,n", [("gl", 2, 2), ("osp", 5, 2), ("q", 0, 3), ("p", 0, 3)])
def test_pairing_law(fam, m, n):
    rs = build_root_system(fam, m, n)
    T = Ring(["t"], laurent=True)
    t = T.var("t")
    src = rs.ring(True)
    for beta in rs.even_roots:
        sub = Substitution(src, {k: t ** e for k, e in enumerate(rs.c_beta(beta))}, T)
        for alpha in rs.roots:
            assert sub(rs.character(alpha, src)) == t ** int(rs.bilinear(alpha, beta))


@given(st.integers(-5, 5).filter(bool))
def test_c_beta_point_is_a_homomorphism(k):
    rs = build_root_system("gl", 2, 1)
    beta = rs.omega[0]
    s, t = Fraction(k), Fraction(k + 11)
    lhs = rs.c_beta_point(beta, s * t)
    rhs = tuple(a * b for a, b in zip(rs.c_beta_point(beta, s), rs.c_beta_point(beta, t)))
    assert lhs == rhs


def test_h_and_character():
    rs = build_root_system("gl", 1, 1)
    a = rs.omega[0]
    assert str(rs.h(a)) == "X1 + Y1"
    assert str(rs.character(a, rs.ring(True))) == "x1*y1^-1"


def test_invalid_types():
    for args in [("gl", 0, 0), ("sl", 2, 2), ("xx", 1, 1), ("q", 0, 0)]:
        with pytest.raises(InvalidType):
            build_root_system(*args)


def test_describe_and_json():
    rs = build_root_system("q", 0, 3)
    d = rs.describe()
    assert d["weyl_group"] == "S3" and d["defect"] == 1
    assert rs.point_from_json({"eps": ["1/2", "0", "3"]}, False) == (Fraction(1, 2), 0, 3)
    with pytest.raises(ValueError):
        rs.point_from_json({"eps": ["1"]}, False)
    assert SuperType.from_dict({"family": "gl", "m": 2, "n": 1}) == SuperType("gl", 2, 1)
