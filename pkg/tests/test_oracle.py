from fractions import Fraction as F
from math import comb, sqrt

import numpy as np
import pytest

from symcat.catalog import SpaceDescriptor, dimension, enumerate_spaces, isotropy, space_id
from symcat.curvature import spectrum
from symcat.oracle import (
    DEFAULT,
    NEARLY_KAHLER_SPECTRUM,
    REALIZATION_FACTOR,
    NonProportional,
    OracleConfig,
    OracleError,
    SpectrumMismatch,
    UnsupportedFamily,
    build_algebra,
    compare,
    curvature_matrix,
    holonomy_gram,
    killing_fit,
    nearly_kahler_s3s3,
    numeric_spectrum,
    p_route_operator,
    paper_killing_constant,
    recognize,
    supports,
    symmetric_pair,
)

S = SpaceDescriptor.of


@pytest.mark.parametrize("kind,n,dim", [("so", 3, 3), ("su", 2, 3), ("sp", 2, 10), ("su", 4, 15), ("u", 3, 9),
                                        ("sp", 1, 3), ("so", 7, 21)])
def test_algebra_dimensions_and_closure(kind, n, dim):
    g = build_algebra(kind, n)
    assert g.dim == dim
    rng = np.random.default_rng(1)
    assert g.closure_residual(rng) < 1e-10
    assert g.jacobi_residual(rng) < 1e-10
    B = g.rows @ g.rows.T
    assert np.allclose(B.toarray(), np.eye(dim))  # Frobenius-orthonormal, so independent


def test_so3_structure_constants_are_levi_civita():
    c = build_algebra("so", 3).structure_constants
    assert np.allclose(c, -c.transpose(1, 0, 2))
    assert np.allclose(c, -c.transpose(0, 2, 1))  # ad is antisymmetric for an orthonormal basis
    eps = np.zeros((3, 3, 3))
    for (i, j, k), sign in {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (2, 1, 0): -1,
                            (0, 2, 1): -1}.items():
        eps[i, j, k] = sign
    scaled = c * sqrt(2)
    assert np.allclose(np.abs(scaled), np.abs(eps))
    s = np.sign(scaled[0, 1, 2])
    assert np.allclose(scaled, s * eps * np.sign(np.einsum("ijk,ijk->", scaled, eps)) * s)


def test_oversize_rejected():
    with pytest.raises(OracleError):
        build_algebra("sp", 99)
    with pytest.raises(UnsupportedFamily):
        build_algebra("g", 2)


def test_killing_examples():
    assert killing_fit(build_algebra("so", 5)).constant == pytest.approx(3, rel=1e-12)
    su3 = killing_fit(build_algebra("su", 3)).constant * REALIZATION_FACTOR["su"]
    assert su3 == pytest.approx(6, rel=1e-12)
    sp2 = killing_fit(build_algebra("sp", 2)).constant * REALIZATION_FACTOR["sp"]
    assert sp2 == pytest.approx(6, rel=1e-12)


@pytest.mark.parametrize("kind,ns", [("su", range(2, 9)), ("sp", range(1, 6)), ("so", range(3, 14))])
def test_killing_constants_fit_formulas(kind, ns):
    for n in ns:
        fit = killing_fit(build_algebra(kind, n))
        assert fit.residual < 1e-8
        assert fit.constant * REALIZATION_FACTOR[kind] == pytest.approx(paper_killing_constant(kind, n), rel=1e-8)


def test_killing_sampled_route_agrees():
    # so(17) is above the structure-constant cutoff and uses random B(X, X) samples
    fit = killing_fit(build_algebra("so", 17, OracleConfig()))
    assert fit.constant == pytest.approx(15, rel=1e-10) and fit.samples == 4


def test_u_n_is_not_proportional():
    with pytest.raises(NonProportional):
        killing_fit(build_algebra("u", 3))


def test_pair_examples():
    p = symmetric_pair(S("Sphere", 4))
    assert (p.dim_h, p.dim_p) == (6, 4)
    p = symmetric_pair(S("AI", 3))
    assert (p.dim_h, p.dim_p) == (3, 5)
    p = symmetric_pair(SpaceDescriptor.type_ii("A", 1))
    assert (p.dim_h, p.dim_p) == (3, 3)


def test_exceptional_unsupported():
    with pytest.raises(UnsupportedFamily):
        symmetric_pair(S("G2I"))
    assert not supports(S("G2I"))
    assert not supports(SpaceDescriptor.type_ii("G2"))


@pytest.mark.parametrize("sid", ["sphere-5", "A4-III-p2", "C3-II-p1", "B-grass-k1-l2", "D-grass-odd-k1-l1",
                                 "D-grass-even-k2-l2", "A3-I", "A5-II", "C3-I", "D4-III", "B2", "C3"])
def test_cartan_relations(sid):
    from symcat.catalog import parse_space

    pair = symmetric_pair(parse_space(sid))
    res = pair.cartan_residuals()
    assert max(res.values()) < 1e-10, res


def test_curvature_matrix_examples():
    for n in (3, 4, 6):
        vals = np.linalg.eigvalsh(curvature_matrix(symmetric_pair(S("Sphere", n))))
        assert np.allclose(vals, 1 / (2 * (n - 1)))
    vals = np.linalg.eigvalsh(curvature_matrix(symmetric_pair(SpaceDescriptor.type_ii("A", 1))))
    assert np.allclose(vals, 0.25)
    num = numeric_spectrum(np.linalg.eigvalsh(curvature_matrix(symmetric_pair(S("AI", 4)))))
    assert num.as_dict() == {F(3, 8): 6, F(0): comb(9, 2) - 6}


def test_curvature_matrix_psd_rank_and_ricci():
    for s in [S("CpxGrass", 2, 3), S("QuatGrass", 1, 2), S("RealGrassB", 2, 1), S("DnIII", 4)]:
        M = curvature_matrix(symmetric_pair(s))
        assert np.allclose(M, M.T)
        vals = np.linalg.eigvalsh(M)
        assert vals.min() > -1e-10
        assert int(np.sum(vals > 1e-9)) == isotropy(s).dim
        # sum of lambda * mult is dim M / 4 (Ric = g/2)
        assert abs(np.trace(M) * 4 / dimension(s) - 1) < 1e-8


def test_compare_examples():
    rep = compare(S("CpxGrass", 2, 3))
    assert rep.ok
    assert dict(rep.numeric.recognized) == {F(1, 2): 1, F(3, 10): 3, F(1, 5): 8, F(0): comb(12, 2) - 12}
    rep = compare(S("QuatGrass", 1, 2))
    assert {v for v in rep.numeric.as_dict() if v} == {F(1, 4), F(1, 8)}
    rep = compare(S("RealGrassDEven", 2, 2))
    assert {v for v in rep.numeric.as_dict() if v} == {F(1, 3)}
    assert rep.to_json()["status"] == "ok"


def test_compare_reports_mismatch():
    # a realization-independent wrong scale forces a mismatch
    pair = symmetric_pair(S("Sphere", 3))
    vals = np.linalg.eigvalsh(curvature_matrix(pair)) * 1.5
    assert numeric_spectrum(vals).as_dict() != spectrum(S("Sphere", 3)).values()
    err = SpectrumMismatch("x", {F(1): 1}, {F(2): 1}, 0.0)
    assert "x" in str(err)


def test_gram_route_matches_full_route():
    cfg = OracleConfig(full_matrix_limit=1)
    for s in [S("CpxGrass", 2, 2), S("Sphere", 6), S("AI", 4)]:
        assert compare(s, cfg).numeric.route == "gram"
        assert compare(s, cfg).numeric.as_dict() == compare(s).numeric.as_dict()


def test_p_route_matches_bracket_route():
    for s in [S("CpxGrass", 2, 3), S("QuatGrass", 1, 2), S("RealGrassB", 2, 1), S("AI", 4), S("DnIII", 4),
              S("Sphere", 5), SpaceDescriptor.type_ii("B", 2)]:
        pair = symmetric_pair(s)
        p_vals = np.sort(np.linalg.eigvalsh(p_route_operator(pair)))
        b_vals = np.sort(np.linalg.eigvalsh(holonomy_gram(pair)))
        assert np.allclose(p_vals, b_vals, atol=1e-9), space_id(s)


def test_recognize():
    assert recognize(0.375) == F(3, 8)
    assert recognize(1 / 3 + 1e-12) == F(1, 3)
    assert recognize(np.pi) is None


def test_all_small_supported_spaces_match():
    spaces = [s for s in enumerate_spaces(20) if supports(s)]
    assert len(spaces) > 40
    for s in spaces:
        rep = compare(s)
        assert rep.ok and rep.numeric.max_dev < 1e-8


def test_nearly_kahler():
    nk = nearly_kahler_s3s3()
    assert dict(nk.recognized) == NEARLY_KAHLER_SPECTRUM
    assert nk.max_value == F(7, 24) < F(5, 12)
    assert nk.trace_spectrum == F(5, 4)
    assert nk.trace_matrix == pytest.approx(1.25, abs=1e-10)
    assert nk.einstein == pytest.approx(5 / 12, abs=1e-10)
    assert nk.symmetric_residual < 1e-12
    assert sum(m for _, m in nk.recognized) == comb(6, 2)


def test_default_config():
    assert DEFAULT.max_dim_p == 60 and DEFAULT.tolerance == 1e-8 and DEFAULT.max_denominator == 1000
