from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symcat.catalog import SpaceDescriptor, classify, dimension, enumerate_spaces, isotropy, space_id
from symcat.curvature import (
    formula_values,
    hermitian_quadruple_coincidence,
    spectrum,
    theorem1_check,
    theorem2_check,
    theorem3_check,
    trace_check,
    wolf_values,
)
from symcat.poincare import poincare

S = SpaceDescriptor.of
ALL = enumerate_spaces(128)


def nonzero(s):
    return {v: m for v, m in spectrum(s).values().items() if v != 0}


def by_label(s):
    return {e.label: e.value for e in spectrum(s).entries}


def test_exceptional_examples():
    assert nonzero(S("E6I")) == {F(7, 24): 36}
    assert nonzero(S("F4I")) == {F(7, 18): 3, F(5, 18): 21}
    assert nonzero(S("E6IV")) == {F(1, 8): 52}
    assert nonzero(S("F4II")) == {F(1, 9): 36}
    assert nonzero(S("G2I")) == {F(1, 4): 3, F(5, 12): 3}


def test_d4i4_single_value():
    assert nonzero(S("RealGrassDEven", 2, 2)) == {F(1, 3): 12}


def test_su4_so4_single_value():
    assert nonzero(S("AI", 4)) == {F(3, 8): 6}


@given(st.integers(1, 12), st.integers(1, 12))
def test_complex_grassmannian_formula(p, q):
    p, q = min(p, q), max(p, q)
    vals = by_label(S("CpxGrass", p, q))
    assert vals["u(1)"] == F(1, 2)
    if q > 1:
        assert vals["su(q)"] == F(p, 2 * (p + q))
    if p > 1:
        assert vals["su(p)"] == F(q, 2 * (p + q))


@given(st.integers(1, 10), st.integers(1, 10))
def test_quaternionic_grassmannian_formula(p, q):
    p, q = min(p, q), max(p, q)
    vals = by_label(S("QuatGrass", p, q))
    assert vals["sp(p)"] == F(q, 2 * (p + q + 1))
    assert vals["sp(q)"] == F(p, 2 * (p + q + 1))


@given(st.integers(2, 60))
def test_sphere_formula(n):
    assert set(nonzero(S("Sphere", n))) == {F(1, 2 * (n - 1))}


def test_cpn_matches_hermitian_formula():
    for n in range(2, 12):
        vals = by_label(S("CpxGrass", 1, n))
        assert vals["su(q)"] == F(1, 2 * (n + 1))
        # Hermitian route: (dim M - 2) / (4 dim h_1)
        assert vals["su(q)"] == F(2 * n - 2, 4 * (n * n - 1))


def test_trace_identity_examples():
    for n in range(1, 10):
        s = S("QuatGrass", 1, n)
        spec = spectrum(s)
        assert F(4 * n, 2) == 2 * sum(e.value * e.mult for e in spec.entries)
    assert 2 * F(7, 24) * 36 == 21
    assert trace_check(SpaceDescriptor.type_ii("E7"))


def test_theorem1_examples():
    r = theorem1_check(S("CpxGrass", 2, 3))
    assert r.ok and r.distinct_nonzero == 3
    assert set(nonzero(S("CpxGrass", 2, 3))) == {F(1, 2), F(3, 10), F(1, 5)}
    assert theorem1_check(S("CpxGrass", 3, 3)).distinct_nonzero == 2
    assert theorem1_check(S("Sphere", 7)).distinct_nonzero == 1
    assert set(nonzero(S("Sphere", 7))) == {F(1, 12)}


def test_theorem2_examples():
    assert theorem2_check(S("E7VII")) and spectrum(S("E7VII")).max_value == F(1, 2)
    assert spectrum(S("E8VIII")).max_value == F(4, 15) and poincare(S("E8VIII")).b(2) == 0
    s2 = S("Sphere", 2)
    assert spectrum(s2).max_value == F(1, 2) and poincare(s2).b(2) == 1 and theorem2_check(s2)


def test_theorem3_examples():
    assert nonzero(S("E6IV")) == {F(26, 4 * 52): 52}
    assert poincare(SpaceDescriptor.type_ii("F4")).b(3) == 1
    assert theorem3_check(S("F4II")) and theorem3_check(S("E6IV"))


def test_quadruple_coincidence():
    four = hermitian_quadruple_coincidence()
    mults = []
    for s in four:
        nz = nonzero(s)
        assert set(nz) == {F(1, 2), F(1, 6)}
        assert nz[F(1, 2)] == 1
        mults.append(nz[F(1, 6)])
    assert mults == [3, 15, 45, 78]


def test_spectrum_invariants_everywhere():
    for s in ALL:
        spec = spectrum(s)
        assert spec.dim_h == isotropy(s).dim
        assert spec.zero_multiplicity == comb(dimension(s), 2) - isotropy(s).dim >= 0
        assert all(0 <= e.value <= F(1, 2) for e in spec.entries)
        assert trace_check(s, spec), space_id(s)
        assert theorem1_check(s).ok, space_id(s)
        assert theorem2_check(s), space_id(s)
        assert theorem3_check(s), space_id(s)


def test_three_values_only_on_complex_grassmannians():
    for s in ALL:
        if theorem1_check(s).distinct_nonzero == 3:
            assert s.family == "CpxGrass" and 2 <= s.params[0] < s.params[1]


def test_quarter_only_for_groups():
    for s in ALL:
        vals = {e.value for e in spectrum(s).entries}
        if s.family in ("AI", "AII", "E6I", "E6IV", "E7V", "E8VIII", "F4II") or s.family == "TypeII":
            assert (vals == {F(1, 4)}) == (s.family == "TypeII")


def test_formula_overlaps_agree():
    seen = 0
    for s in ALL:
        primary = by_label(s)
        forms = formula_values(s)
        seen += len(forms) > 1
        for name, vals in forms.items():
            for label, v in vals.items():
                assert primary[label] == v, (space_id(s), name, label)
    assert seen > 50


def test_wolf_formula_on_cpx_two_planes():
    for n in range(2, 20):
        w = wolf_values(S("CpxGrass", 2, n))
        assert w["su(p)"] == F(n, 2 * (n + 2)) == by_label(S("CpxGrass", 2, n))["su(p)"]


def test_wolf_raw_values():
    raw = {e.label: e.raw_text for e in spectrum(S("E6II")).entries}
    assert raw["su(2)"] == "10/24"
    raw = {e.label: e.raw_text for e in spectrum(S("E7VI")).entries}
    assert raw["su(2)"] == "16/36"


@pytest.mark.parametrize("a,b", [
    (("CpxGrass", 1, 1), ("Sphere", 2)),
    (("QuatGrass", 1, 1), ("Sphere", 4)),
    (("CnI", 2), ("RealGrassB", 1, 1)),
    (("DnIII", 3), ("CpxGrass", 1, 3)),
    (("DnIII", 4), ("RealGrassDEven", 1, 3)),
    (("AII", 2), ("Sphere", 5)),
    (("AI", 4), ("RealGrassDOdd", 1, 1)),
])
def test_low_rank_coincidences(a, b):
    sa, sb = S(*a), S(*b)
    assert dimension(sa) == dimension(sb)
    assert poincare(sa).chi_t == poincare(sb).chi_t
    assert spectrum(sa).values() == spectrum(sb).values()


def test_spectrum_json():
    doc = spectrum(S("F4I")).to_json("F4-I")
    assert doc["entries"][0] == {"value": "7/18", "mult": 3, "factor": "su(2)"}
    assert doc["zero_mult"] == comb(28, 2) - 24


def test_classes_do_not_change_spectrum():
    # Hermitian-and-Wolf spaces keep the Hermitian center value
    for s in ALL:
        f = classify(s)
        if f.is_hermitian and f.is_wolf:
            assert spectrum(s).max_value == F(1, 2)
