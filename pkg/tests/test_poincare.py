from fractions import Fraction
from math import comb, prod

import pytest

from refs import takeuchi_at
from symcat.catalog import (
    DegreeData,
    GroupType,
    SpaceDescriptor,
    classify,
    degree_data,
    dimension,
    enumerate_spaces,
    space_id,
)
from symcat.poincare import (
    RankMismatch,
    borel_poincare,
    closed_form,
    euler_both_ways,
    group_poincare,
    poincare,
    takeuchi_poincare,
    wang_ratio,
)
from symcat.qpoly import QPoly, eval_int, exact_div, gaussian_binomial, product, quantum_number

S = SpaceDescriptor.of
ALL = enumerate_spaces(128)
t = QPoly.monomial(1)


def e(d):
    return QPoly.one() + QPoly.monomial(d)


def qn(n, step):
    return quantum_number(n, step)


def test_group_examples():
    assert group_poincare(GroupType("G2")) == e(3) * e(11)
    assert group_poincare(GroupType("SO2")) == e(1)
    for n in range(1, 6):
        assert group_poincare(GroupType("U", n)) == product(e(2 * k - 1) for k in range(1, n + 1))


def test_borel_examples():
    for n in range(1, 8):
        assert borel_poincare(degree_data(S("CpxGrass", 1, n))) == qn(n + 1, 2)
    for k in range(1, 4):
        for l in range(1, 4):
            want = gaussian_binomial(k, l, 4) * qn(2, 2 * k)
            assert borel_poincare(degree_data(S("RealGrassB", k, l))) == want
    for m in range(2, 7):
        assert borel_poincare(degree_data(S("RealGrassDEven", 1, m))) == qn(m + 1, 2) * qn(2, 2 * m)


def test_borel_rejects_unequal_rank():
    with pytest.raises(RankMismatch):
        borel_poincare(degree_data(S("AI", 5)))
    with pytest.raises(RankMismatch):
        takeuchi_poincare(DegreeData((2, 3), (2,), (2, 3), ()))


def test_takeuchi_examples():
    for m in range(1, 6):
        assert takeuchi_poincare(degree_data(S("AI", 2 * m + 1))) == product(e(4 * i + 1) for i in range(1, m + 1))
    for m in range(2, 6):
        want = qn(2, 2 * m) * product(e(4 * i + 1) for i in range(1, m))
        assert takeuchi_poincare(degree_data(S("AI", 2 * m))) == want
    assert takeuchi_poincare(degree_data(S("E6I"))) == qn(3, 8) * e(9) * e(17)


def test_takeuchi_reduces_to_borel():
    for s in ALL:
        d = degree_data(s) if s.family != "TypeII" else None
        if d is not None and not d.d_g0:
            assert takeuchi_poincare(d) == borel_poincare(d)


def test_poincare_examples():
    assert poincare(S("AI", 4)).chi_t == e(4) * e(5)
    for n in range(2, 12):
        assert poincare(S("Sphere", n)).chi_t == e(n)
    assert poincare(S("E8IX")).chi_t == qn(15, 4) * qn(4, 12) * qn(2, 20)
    r = poincare(S("E6I"))
    assert r.betti[:10] == (1, 0, 0, 0, 0, 0, 0, 0, 1, 1)
    assert r.total_betti == 12 and r.euler == 0


def test_euler_examples():
    assert euler_both_ways(S("E7V")) == (72, 72)
    for k, l in [(1, 1), (1, 3), (2, 2)]:
        assert euler_both_ways(S("RealGrassDOdd", k, l)) == (0, None)
    for p, q in [(1, 4), (2, 3), (3, 3)]:
        assert euler_both_ways(S("CpxGrass", p, q)) == (comb(p + q, p),) * 2


def test_takeuchi_matches_rational_evaluation():
    # independent route: evaluate the degree quotient as a rational number
    for s in ALL[::7]:
        if s.family == "TypeII":
            continue
        d = degree_data(s)
        chi = poincare(s).chi_t
        for x in (2, 3, Fraction(1, 2)):
            assert eval_int(chi, x) == takeuchi_at(d.d_g1, d.d_h, d.d_g0, x), space_id(s)


def test_closed_form_equals_degree_route():
    for s in ALL:
        assert closed_form(s).poly() == poincare(s).chi_t, space_id(s)


def test_manifold_invariants():
    for s in ALL + enumerate_spaces(20, include_nonsemisimple=True):
        r = poincare(s)
        assert r.chi_t.is_nonnegative_integral()
        assert r.b(0) == 1 and r.palindromic
        assert r.chi_t.degree == dimension(s)
        d = degree_data(s)
        assert (r.euler == 0) == bool(d.d_g0)
        if not d.d_g0:
            assert wang_ratio(d) == r.euler


def test_betti_class_characterizations():
    for s in ALL:
        r = poincare(s)
        f = classify(s)
        assert r.b(2) == (1 if f.is_hermitian else 0), space_id(s)
        group = f.is_type_ii or s == S("Sphere", 3)
        assert (r.b(3) != 0) == group
        if group:
            assert r.b(3) == 1


def test_simple_isotropy_betti():
    for fam, ps in [("AI", (3,)), ("AI", (5,)), ("AII", (3,)), ("E6I", ()), ("E6IV", ()), ("E7V", ()),
                    ("E8VIII", ()), ("F4II", ())]:
        r = poincare(S(fam, *ps))
        assert r.b(2) == r.b(3) == r.b(4) == 0


def test_odd_quadric():
    for m in range(1, 10):
        assert poincare(S("RealGrassB", 1, m)).chi_t == qn(2 * m + 2, 2)


def test_even_quadric():
    for m in range(2, 10):
        assert poincare(S("RealGrassDEven", 1, m)).chi_t == qn(m + 1, 2) * qn(2, 2 * m)


def test_real_four_plane_grassmannians():
    for l in range(1, 8):
        assert poincare(S("RealGrassB", 2, l)).chi_t == qn(l + 1, 4) * qn(l + 2, 4)
    for l in range(2, 8):
        assert poincare(S("RealGrassDEven", 2, l)).chi_t == qn(l + 1, 4) * (qn(l + 1, 4) + QPoly.monomial(2 * l))


def test_complex_two_plane_grassmannian():
    for n in range(2, 10):
        want = exact_div(qn(n + 1, 2) * qn(n + 2, 2), qn(2, 2))
        assert poincare(S("CpxGrass", 2, n)).chi_t == want


def test_d_even_closed_form_from_degrees():
    # D_{k+l}I_{2k}: the table's quotient against Borel's formula on raw degrees
    for k in range(1, 5):
        for l in range(max(k, 2), 6):
            s = S("RealGrassDEven", k, l)
            table = exact_div(qn(2, 2 * k) * qn(2, 2 * l) * gaussian_binomial(k, l, 4), qn(2, 2 * k + 2 * l))
            assert table == borel_poincare(degree_data(s))


def test_wang_ratio_is_degree_product():
    d = degree_data(S("E8IX"))
    assert wang_ratio(d) == prod(d.d_g) // prod(d.d_h) == 120
    assert wang_ratio(degree_data(S("AI", 5))) is None


def test_closed_form_rendering():
    assert closed_form(S("E6I")).format() == "[3]_t^8(1+t^9)(1+t^17)"
    assert closed_form(S("E6I")).format("latex") == "[3]_{t^{8}}(1+t^{9})(1+t^{17})"
    assert closed_form(SpaceDescriptor.type_ii("G2")).format() == "(1+t^3)(1+t^11)"
