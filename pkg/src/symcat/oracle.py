"""Numerical cross-check of the closed-form spectra from explicit matrix Lie algebras.

Every algebra is realized by real antisymmetric matrices with a
Frobenius-orthonormal basis, stored as the rows of a sparse ``(dim, N*N)``
matrix. Every involution used here is conjugation by a sparse orthogonal
``S``, so the isotropy and tangent bases can usually be read off as subsets
of the standard basis and the bracket tables stay sparse.

With ``B_g = c tr(XY)`` the metric ``-B_g`` equals ``c`` times the
Frobenius product, so in a Frobenius-orthonormal basis ``f_i`` of ``p``
the curvature operator on ``Lambda^2 p`` (basis ``e_i^e_j/sqrt 2``) is
``M = W W^T / c`` with rows ``W_(ij) = vec [f_i, f_j]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .catalog import SpaceDescriptor, dimension, isotropy, space_id
from .curvature import spectrum as closed_spectrum

__all__ = [
    "OracleError",
    "NonProportional",
    "UnsupportedFamily",
    "SpectrumMismatch",
    "OracleConfig",
    "MatrixLieAlgebra",
    "SymmetricPair",
    "NumericSpectrum",
    "OracleReport",
    "build_algebra",
    "killing_constant",
    "paper_killing_constant",
    "symmetric_pair",
    "curvature_matrix",
    "holonomy_gram",
    "p_route_operator",
    "numeric_spectrum",
    "recognize",
    "supports",
    "compare",
    "nearly_kahler_s3s3",
]


class OracleError(RuntimeError):
    pass


class NonProportional(OracleError):
    """The Killing form is not a multiple of the trace form in this realization."""


class UnsupportedFamily(OracleError):
    pass


class SpectrumMismatch(OracleError):
    def __init__(self, space: str, expected: dict, got: dict, max_dev: float):
        self.expected, self.got, self.max_dev = expected, got, max_dev
        diff = _diff(expected, got)
        super().__init__(f"{space}: spectrum mismatch (max_dev={max_dev:.2e}): {diff}")


def _diff(expected: dict, got: dict) -> str:
    keys = sorted(set(expected) | set(got), reverse=True)
    parts = [f"{k}: expected {expected.get(k, 0)}, got {got.get(k, 0)}"
             for k in keys if expected.get(k, 0) != got.get(k, 0)]
    return "; ".join(parts) or "multiplicities agree, deviation too large"


@dataclass(frozen=True)
class OracleConfig:
    max_dim_p: int = 60
    tolerance: float = 1e-8
    max_denominator: int = 1000
    # ambient sizes of the real realizations
    max_so: int = 64
    max_su: int = 32
    max_sp: int = 16
    # full Lambda^2 matrix below this many pairs, holonomy Gram matrix above
    full_matrix_limit: int = 600
    seed: int = 0


DEFAULT = OracleConfig()


# ---------------------------------------------------------------- quaternions

_QMUL = np.zeros((4, 4, 4))
# basis 1, i, j, k; _QMUL[a, b] = coordinates of e_a * e_b
for _a, _b, _c, _s in [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, -1), (1, 2, 3, 1), (1, 3, 2, -1),
    (2, 0, 2, 1), (2, 1, 3, -1), (2, 2, 0, -1), (2, 3, 1, 1),
    (3, 0, 3, 1), (3, 1, 2, 1), (3, 2, 1, -1), (3, 3, 0, -1),
]:
    _QMUL[_a, _b, _c] = _s


def quat_left(u: int) -> np.ndarray:
    """4x4 real matrix of left multiplication by the unit quaternion ``e_u``."""
    return _QMUL[u].T.copy()


# ---------------------------------------------------------------- algebras

def _unit_entries(n: int, a: int, b: int) -> np.ndarray:
    m = np.zeros((n, n))
    m[a, b] = 1.0
    return m


def _complexify(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    """Real 2n realization of ``re + i im``."""
    return np.block([[re, -im], [im, re]])


def _quat_real(blocks: dict[tuple[int, int], np.ndarray], n: int) -> np.ndarray:
    out = np.zeros((4 * n, 4 * n))
    for (a, b), q in blocks.items():
        out[4 * a:4 * a + 4, 4 * b:4 * b + 4] += q
    return out


def _gell_mann_diagonals(n: int) -> list[np.ndarray]:
    """Orthonormal basis of traceless real diagonal n x n matrices."""
    out = []
    for k in range(1, n):
        d = np.zeros(n)
        d[:k] = 1.0
        d[k] = -k
        out.append(d / math.sqrt(k * (k + 1)))
    return out


def _rows(mats: list[np.ndarray]) -> sp.csr_matrix:
    rows = []
    for m in mats:
        m = m / np.linalg.norm(m)
        rows.append(sp.csr_matrix(m.reshape(1, -1)))
    return sp.vstack(rows, format="csr")


@dataclass
class MatrixLieAlgebra:
    """A compact real matrix Lie algebra with a Frobenius-orthonormal basis.

    ``rows`` holds the basis as the rows of a sparse ``(dim, N*N)`` matrix.
    """

    name: str
    kind: str
    n: int
    ambient_dim: int
    rows: sp.csr_matrix

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    @property
    def basis(self) -> np.ndarray:
        """Dense ``(dim, N, N)`` array; only for small algebras."""
        N = self.ambient_dim
        return self.rows.toarray().reshape(-1, N, N)

    def element(self, coeffs: np.ndarray) -> np.ndarray:
        N = self.ambient_dim
        return np.asarray(self.rows.T @ coeffs).reshape(N, N)

    def coords(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(self.rows @ X.reshape(-1))

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        return self.element(rng.standard_normal(self.dim))

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """``c[i, j, k] = <[e_i, e_j], e_k>``; dense, so small algebras only."""
        if self.dim > 300:
            raise OracleError(f"{self.name}: structure constants are dim^3; too large ({self.dim})")
        W = bracket_rows(self.rows, self.ambient_dim, all_pairs=True)
        c = np.asarray((W @ self.rows.T).todense()).reshape(self.dim, self.dim, self.dim)
        return c

    def closure_residual(self, rng: np.random.Generator, samples: int = 3) -> float:
        worst = 0.0
        for _ in range(samples):
            X, Y = self.random_element(rng), self.random_element(rng)
            Z = X @ Y - Y @ X
            back = self.element(self.coords(Z))
            worst = max(worst, np.linalg.norm(Z - back) / max(np.linalg.norm(Z), 1e-300))
        return worst

    def jacobi_residual(self, rng: np.random.Generator, samples: int = 3) -> float:
        def br(a, b):
            return a @ b - b @ a

        worst = 0.0
        for _ in range(samples):
            X, Y, Z = (self.random_element(rng) for _ in range(3))
            J = br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y))
            worst = max(worst, float(np.linalg.norm(J)))
        return worst


def build_algebra(kind: str, n: int, config: OracleConfig = DEFAULT) -> MatrixLieAlgebra:
    """so(n), su(n), u(n) or sp(n) in a real antisymmetric realization."""
    if kind == "so":
        if not 2 <= n <= config.max_so:
            raise OracleError(f"so({n}) outside 2..{config.max_so}")
        mats = [_unit_entries(n, a, b) - _unit_entries(n, b, a) for a in range(n) for b in range(a + 1, n)]
        return MatrixLieAlgebra(f"so({n})", kind, n, n, _rows(mats))
    if kind in ("su", "u"):
        lo = 2 if kind == "su" else 1
        if not lo <= n <= config.max_su:
            raise OracleError(f"{kind}({n}) outside {lo}..{config.max_su}")
        z = np.zeros((n, n))
        mats = []
        for a in range(n):
            for b in range(a + 1, n):
                e = _unit_entries(n, a, b)
                mats.append(_complexify(e - e.T, z))
                mats.append(_complexify(z, e + e.T))
        for d in _gell_mann_diagonals(n):
            mats.append(_complexify(z, np.diag(d)))
        if kind == "u":
            mats.append(_complexify(z, np.eye(n)))
        return MatrixLieAlgebra(f"{kind}({n})", kind, n, 2 * n, _rows(mats))
    if kind == "sp":
        if not 1 <= n <= config.max_sp:
            raise OracleError(f"sp({n}) outside 1..{config.max_sp}")
        L = [quat_left(u) for u in range(4)]
        mats = []
        for a in range(n):
            for b in range(a + 1, n):
                mats.append(_quat_real({(a, b): L[0], (b, a): -L[0]}, n))
                for u in (1, 2, 3):
                    mats.append(_quat_real({(a, b): L[u], (b, a): L[u]}, n))
            for u in (1, 2, 3):
                mats.append(_quat_real({(a, a): L[u]}, n))
        return MatrixLieAlgebra(f"sp({n})", kind, n, 4 * n, _rows(mats))
    raise UnsupportedFamily(f"no matrix model for {kind!r}")


def direct_sum_double(g: MatrixLieAlgebra) -> MatrixLieAlgebra:
    """``g + g`` realized block-diagonally."""
    N = g.ambient_dim
    coo = g.rows.tocoo()
    a, c = divmod(coo.col, N)
    cols1 = a * (2 * N) + c
    cols2 = (a + N) * (2 * N) + (c + N)
    rows = sp.vstack([
        sp.csr_matrix((coo.data, (coo.row, cols1)), shape=(g.dim, 4 * N * N)),
        sp.csr_matrix((coo.data, (coo.row, cols2)), shape=(g.dim, 4 * N * N)),
    ], format="csr")
    return MatrixLieAlgebra(f"{g.name}+{g.name}", g.kind, g.n, 2 * N, rows)


# ---------------------------------------------------------------- brackets

def bracket_rows(P: sp.csr_matrix, N: int, all_pairs: bool = False) -> sp.csr_matrix:
    """Rows ``vec [f_i, f_j]`` for ``i < j`` (or all ordered pairs) of the rows of ``P``."""
    d = P.shape[0]
    coo = P.tocoo()
    a, b = divmod(coo.col, N)
    A = sp.csr_matrix((coo.data, (coo.row * N + a, b)), shape=(d * N, N))
    Bm = sp.csr_matrix((coo.data, (a, coo.row * N + b)), shape=(N, d * N))
    prod = (A @ Bm).tocoo()  # block (i, j) = f_i f_j
    i, ra = divmod(prod.row, N)
    j, rc = divmod(prod.col, N)
    col = ra * N + rc
    if all_pairs:
        rows_plus = i * d + j
        rows_minus = j * d + i
        data = np.concatenate([prod.data, -prod.data])
        rows = np.concatenate([rows_plus, rows_minus])
        cols = np.concatenate([col, col])
        return sp.csr_matrix((data, (rows, cols)), shape=(d * d, N * N))
    keep = i != j
    i, j, col, val = i[keep], j[keep], col[keep], prod.data[keep]
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    sign = np.where(i < j, 1.0, -1.0)
    # index of the pair (lo, hi) in lexicographic order of i < j
    pair = lo * d - lo * (lo + 1) // 2 + (hi - lo - 1)
    return sp.csr_matrix((sign * val, (pair, col)), shape=(d * (d - 1) // 2, N * N))


# ---------------------------------------------------------------- Killing form

def _killing_diag(g: MatrixLieAlgebra, X: np.ndarray) -> float:
    """``B(X, X) = -sum_m |[X, e_m]|^2`` (ad is antisymmetric in an orthonormal basis)."""
    N, d = g.ambient_dim, g.dim
    coo = g.rows.tocoo()
    a, b = divmod(coo.col, N)
    stack_rows = sp.csr_matrix((coo.data, (coo.row * N + a, b)), shape=(d * N, N))
    stack_cols = sp.csr_matrix((coo.data, (coo.row * N + b, a)), shape=(d * N, N))
    left = np.asarray(stack_rows @ X).reshape(d, N, N)  # e_m X
    right = np.asarray(stack_cols @ X.T).reshape(d, N, N).transpose(0, 2, 1)  # X e_m
    return -float(np.sum((right - left) ** 2))


@dataclass(frozen=True)
class KillingFit:
    constant: float
    residual: float
    samples: int


_KILLING_CACHE: dict[tuple[str, int], KillingFit] = {}


def killing_fit(g: MatrixLieAlgebra, seed: int = 0, tol: float = 1e-8) -> KillingFit:
    """Fit ``B(X, Y) = c tr(XY)`` in this realization.

    Small algebras use the full Gram matrix of the Killing form over basis
    pairs (from the structure constants); larger ones use ``B(X, X)`` on a
    few random elements. Raises :class:`NonProportional` beyond ``tol``.
    """
    key = (g.name, g.ambient_dim)
    if key in _KILLING_CACHE:
        return _KILLING_CACHE[key]
    if g.dim <= 120:
        c = g.structure_constants
        # B(e_a, e_b) = tr(ad_a ad_b) = -sum_{jk} c[a,j,k] c[b,j,k]; tr(e_a e_b) = -delta_ab
        B = -np.einsum("ajk,bjk->ab", c, c)
        tr = -np.eye(g.dim)
        const = float(np.sum(B * tr) / np.sum(tr * tr))
        resid = float(np.max(np.abs(B - const * tr)) / abs(const)) if const else float("inf")
        fit = KillingFit(const, resid, g.dim * g.dim)
    else:
        rng = np.random.default_rng(seed)
        vals = []
        for _ in range(4):
            X = g.random_element(rng)
            vals.append(_killing_diag(g, X) / float(np.trace(X @ X)))
        vals = np.array(vals)
        const = float(vals.mean())
        fit = KillingFit(const, float(np.max(np.abs(vals - const)) / abs(const)), len(vals))
    if not fit.residual < tol:
        raise NonProportional(f"{g.name}: Killing form not proportional to trace (residual {fit.residual:.2e})")
    _KILLING_CACHE[key] = fit
    return fit


def killing_constant(g: MatrixLieAlgebra) -> float:
    return killing_fit(g).constant


REALIZATION_FACTOR = {"so": 1, "su": 2, "sp": 2}


def paper_killing_constant(kind: str, n: int) -> int:
    """Constants in the complex (su, sp) or real (so) defining representation: 2n, 2(n+1), n-2."""
    return {"su": 2 * n, "sp": 2 * (n + 1), "so": n - 2}[kind]


# ---------------------------------------------------------------- symmetric pairs

@dataclass
class SymmetricPair:
    """``g = h + p`` from the involution ``X -> S X S^T``."""

    space: str
    g: MatrixLieAlgebra
    S: np.ndarray
    h_rows: sp.csr_matrix
    p_rows: sp.csr_matrix
    killing: float
    metadata: dict = field(default_factory=dict)

    @property
    def dim_h(self) -> int:
        return self.h_rows.shape[0]

    @property
    def dim_p(self) -> int:
        return self.p_rows.shape[0]

    def involution(self, X: np.ndarray) -> np.ndarray:
        return self.S @ X @ self.S.T

    def cartan_residuals(self, seed: int = 0, samples: int = 2) -> dict[str, float]:
        """Residuals of sigma^2 = 1, [h,h] in h, [h,p] in p, [p,p] in h and h orthogonal to p."""
        rng = np.random.default_rng(seed)
        N = self.g.ambient_dim

        def rand(rows):
            return np.asarray(rows.T @ rng.standard_normal(rows.shape[0])).reshape(N, N)

        def off(Z, rows):
            back = np.asarray(rows.T @ (rows @ Z.reshape(-1))).reshape(N, N)
            return float(np.linalg.norm(Z - back) / max(np.linalg.norm(Z), 1e-300))

        out = {"sigma2": 0.0, "hh": 0.0, "hp": 0.0, "pp": 0.0}
        for _ in range(samples):
            X = self.g.random_element(rng)
            out["sigma2"] = max(out["sigma2"], float(np.linalg.norm(self.involution(self.involution(X)) - X)))
            H1, H2, P1, P2 = rand(self.h_rows), rand(self.h_rows), rand(self.p_rows), rand(self.p_rows)
            out["hh"] = max(out["hh"], off(H1 @ H2 - H2 @ H1, self.h_rows))
            out["hp"] = max(out["hp"], off(H1 @ P1 - P1 @ H1, self.p_rows))
            out["pp"] = max(out["pp"], off(P1 @ P2 - P2 @ P1, self.h_rows))
        out["orth"] = float(abs(self.h_rows @ self.p_rows.T).max()) if self.dim_h and self.dim_p else 0.0
        return out


def _kron_conj(S: np.ndarray) -> sp.csr_matrix:
    """Sparse ``S (x) S`` so that ``vec(S X S^T) = (S (x) S) vec(X)`` for row-major vec."""
    Ss = sp.csr_matrix(S)
    return sp.kron(Ss, Ss, format="csr")


def _split(g: MatrixLieAlgebra, S: np.ndarray) -> tuple[sp.csr_matrix, sp.csr_matrix]:
    """Orthonormal bases of the +1 and -1 eigenspaces of conjugation by ``S``."""
    K = _kron_conj(S)
    img = (g.rows @ K.T).tocsr()  # rows: vec(S e_k S^T)
    diffp = abs(img - g.rows).max(axis=1).toarray().ravel()
    diffm = abs(img + g.rows).max(axis=1).toarray().ravel()
    plus = np.flatnonzero(diffp < 1e-12)
    minus = np.flatnonzero(diffm < 1e-12)
    rest = np.setdiff1d(np.arange(g.dim), np.concatenate([plus, minus]))
    h_parts = [g.rows[plus]]
    p_parts = [g.rows[minus]]
    if rest.size:
        sub = g.rows[rest]
        Sigma = np.asarray((img[rest] @ sub.T).todense())  # matrix of sigma on span(rest)
        Sigma = (Sigma + Sigma.T) / 2
        w, V = np.linalg.eigh(Sigma)
        if np.max(np.minimum(np.abs(w - 1), np.abs(w + 1))) > 1e-9:
            raise OracleError("involution does not preserve the span of the mixed basis elements")
        for sign, parts in ((1, h_parts), (-1, p_parts)):
            sel = V[:, np.abs(w - sign) < 1e-9]
            if sel.shape[1]:
                dense = sel.T @ sub.toarray()
                dense[np.abs(dense) < 1e-14] = 0.0
                parts.append(sp.csr_matrix(dense))
    return sp.vstack(h_parts, format="csr"), sp.vstack(p_parts, format="csr")


def _diag_sign(p: int, q: int) -> np.ndarray:
    return np.diag(np.concatenate([np.ones(p), -np.ones(q)]))


def _J(n: int) -> np.ndarray:
    z, i = np.zeros((n, n)), np.eye(n)
    return np.block([[z, -i], [i, z]])


ORACLE_FAMILIES = {"TypeII", "Sphere", "CpxGrass", "QuatGrass", "RealGrassB", "RealGrassDOdd",
                   "RealGrassDEven", "AI", "AII", "CnI", "DnIII"}


def _model(s: SpaceDescriptor) -> tuple[str, int, np.ndarray | None]:
    """(algebra kind, n, S) for the classical families; S None means the type II swap."""
    fam, ps = s.family, s.params
    if fam == "TypeII":
        kind = {"A": "su", "B": "so", "C": "sp", "D": "so"}.get(s.group.series)
        if kind is None:
            raise UnsupportedFamily(f"no matrix model for TypeII({s.group.name})")
        n = {"A": s.group.n + 1, "B": 2 * s.group.n + 1, "C": s.group.n, "D": 2 * s.group.n}[s.group.series]
        return kind, n, None
    if fam == "Sphere":
        return "so", ps[0] + 1, _diag_sign(1, ps[0])
    if fam == "CpxGrass":
        p, q = ps
        D = _diag_sign(p, q)
        return "su", p + q, np.kron(np.eye(2), D)
    if fam == "QuatGrass":
        p, q = ps
        return "sp", p + q, np.kron(_diag_sign(p, q), np.eye(4))
    if fam == "RealGrassB":
        k, l = ps
        return "so", 2 * k + 2 * l + 1, _diag_sign(2 * k, 2 * l + 1)
    if fam == "RealGrassDOdd":
        k, l = ps
        return "so", 2 * k + 2 * l + 2, _diag_sign(2 * k + 1, 2 * l + 1)
    if fam == "RealGrassDEven":
        k, l = ps
        return "so", 2 * k + 2 * l, _diag_sign(2 * k, 2 * l)
    n = ps[0]
    if fam == "AI":  # complex conjugation
        return "su", n, _diag_sign(n, n)
    if fam == "AII":  # X -> J conj(X) J^-1
        return "su", 2 * n, np.kron(np.eye(2), _J(n)) @ _diag_sign(2 * n, 2 * n)
    if fam == "CnI":  # conjugation by the scalar quaternion i
        return "sp", n, np.kron(np.eye(n), quat_left(1))
    if fam == "DnIII":  # conjugation by the complex structure
        return "so", 2 * n, _J(n)
    raise UnsupportedFamily(f"no matrix model for {fam}")


def supports(s: SpaceDescriptor, config: OracleConfig = DEFAULT) -> bool:
    """Whether ``s`` has a matrix model within the configured size caps."""
    if s.family not in ORACLE_FAMILIES or dimension(s) > config.max_dim_p:
        return False
    try:
        kind, n, _ = _model(s)
    except UnsupportedFamily:
        return False
    cap = {"so": config.max_so, "su": config.max_su, "sp": config.max_sp}[kind]
    return n <= cap


def symmetric_pair(s: SpaceDescriptor, config: OracleConfig = DEFAULT) -> SymmetricPair:
    if s.family not in ORACLE_FAMILIES:
        raise UnsupportedFamily(f"{space_id(s)}: exceptional families have no matrix model here")
    kind, n, S = _model(s)
    g0 = build_algebra(kind, n, config)
    killing = killing_fit(g0, seed=config.seed, tol=config.tolerance).constant
    if S is None:
        g = direct_sum_double(g0)
        N = g0.ambient_dim
        S = np.block([[np.zeros((N, N)), np.eye(N)], [np.eye(N), np.zeros((N, N))]])
    else:
        g = g0
    h_rows, p_rows = _split(g, S)
    if p_rows.shape[0] != dimension(s) or h_rows.shape[0] != isotropy(s).dim:
        raise OracleError(
            f"{space_id(s)}: split gave dim h={h_rows.shape[0]}, dim p={p_rows.shape[0]}; "
            f"expected {isotropy(s).dim}, {dimension(s)}"
        )
    return SymmetricPair(space_id(s), g, S, h_rows, p_rows, killing, {"kind": kind, "n": n})


def _pp_in_h(pair: SymmetricPair) -> np.ndarray:
    """``C[(ij), a] = <[f_i, f_j], h_a>`` and a residual check that [p, p] lies in h."""
    W = bracket_rows(pair.p_rows, pair.g.ambient_dim)
    C = np.asarray((W @ pair.h_rows.T).todense())
    total = float(W.multiply(W).sum())
    leak = abs(total - float(np.sum(C * C)))
    if leak > 1e-9 * max(total, 1.0):
        raise OracleError(f"{pair.space}: [p, p] not contained in h (leak {leak:.2e})")
    return C


def curvature_matrix(pair: SymmetricPair) -> np.ndarray:
    """Symmetric ``C(d,2) x C(d,2)`` matrix of the curvature operator on ``Lambda^2 p``."""
    C = _pp_in_h(pair)
    return (C @ C.T) / pair.killing


def holonomy_gram(pair: SymmetricPair) -> np.ndarray:
    """``C^T C / c`` on h; same nonzero spectrum as :func:`curvature_matrix`."""
    C = _pp_in_h(pair)
    return (C.T @ C) / pair.killing


def p_route_operator(pair: SymmetricPair) -> np.ndarray:
    """``(I - P) / 2`` on h with ``P = B_h / B_g`` from the brackets of h alone."""
    m = pair.dim_h
    if m > 400:
        raise OracleError(f"{pair.space}: P route needs dim h^3 storage; dim h = {m}")
    W = bracket_rows(pair.h_rows, pair.g.ambient_dim, all_pairs=True)
    ch = np.asarray((W @ pair.h_rows.T).todense()).reshape(m, m, m)
    Bh = -np.einsum("ajk,bjk->ab", ch, ch)
    Bg = -pair.killing * np.eye(m)
    P = Bh @ np.linalg.inv(Bg)
    return 0.5 * (np.eye(m) - P)


# ---------------------------------------------------------------- recognition

def recognize(x: float, max_denominator: int = 1000, tol: float = 1e-8) -> Fraction | None:
    r = Fraction(x).limit_denominator(max_denominator)
    return r if abs(float(r) - x) < tol else None


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: np.ndarray
    recognized: tuple[tuple[Fraction, int], ...]
    max_dev: float
    unrecognized: tuple[float, ...] = ()
    route: str = "full"

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.recognized)

    def clusters(self, digits: int = 12) -> list[tuple[float, int]]:
        out: dict[float, int] = {}
        for v in self.eigenvalues:
            key = round(float(v), digits) + 0.0
            out[key] = out.get(key, 0) + 1
        return sorted(out.items(), reverse=True)


def numeric_spectrum(values: np.ndarray, extra_zeros: int = 0, max_denominator: int = 1000,
                     tol: float = 1e-8, route: str = "full") -> NumericSpectrum:
    values = np.sort(np.asarray(values, dtype=float))[::-1]
    counts: dict[Fraction, int] = {}
    bad: list[float] = []
    dev = 0.0
    for v in values:
        r = recognize(float(v), max_denominator, tol)
        if r is None:
            bad.append(float(v))
            continue
        dev = max(dev, abs(float(r) - float(v)))
        counts[r] = counts.get(r, 0) + 1
    if extra_zeros:
        counts[Fraction(0)] = counts.get(Fraction(0), 0) + extra_zeros
    rec = tuple(sorted(counts.items(), reverse=True))
    if extra_zeros:
        values = np.concatenate([values, np.zeros(extra_zeros)])
    return NumericSpectrum(values, rec, dev, tuple(bad), route)


def pair_spectrum(pair: SymmetricPair, config: OracleConfig = DEFAULT) -> NumericSpectrum:
    d = pair.dim_p
    npairs = d * (d - 1) // 2
    if npairs <= config.full_matrix_limit:
        vals = np.linalg.eigvalsh(curvature_matrix(pair))
        return numeric_spectrum(vals, 0, config.max_denominator, config.tolerance, "full")
    vals = np.linalg.eigvalsh(holonomy_gram(pair))
    return numeric_spectrum(vals, npairs - pair.dim_h, config.max_denominator, config.tolerance, "gram")


@dataclass(frozen=True)
class OracleReport:
    space: str
    numeric: NumericSpectrum
    closed_form: dict[Fraction, int]
    killing: float
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_json(self) -> dict:
        def frac(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {
            "space": self.space,
            "float_spectrum": [[v, m] for v, m in self.numeric.clusters()],
            "recognized": [[frac(v), m] for v, m in self.numeric.recognized],
            "closed_form": [[frac(v), m] for v, m in self.closed_form.items()],
            "max_dev": self.numeric.max_dev,
            "route": self.numeric.route,
            "killing_constant": self.killing,
            "status": self.status,
        }


def compare(s: SpaceDescriptor, config: OracleConfig = DEFAULT, strict: bool = True) -> OracleReport:
    """Numeric spectrum of ``s`` against the closed form; raises :class:`SpectrumMismatch` when ``strict``."""
    pair = symmetric_pair(s, config)
    num = pair_spectrum(pair, config)
    expected = closed_spectrum(s).values()
    got = num.as_dict()
    ok = not num.unrecognized and got == expected and num.max_dev < config.tolerance
    report = OracleReport(space_id(s), num, expected, pair.killing, "ok" if ok else "mismatch")
    if not ok and strict:
        raise SpectrumMismatch(space_id(s), expected, got, num.max_dev)
    return report


# ---------------------------------------------------------------- nearly Kahler S^3 x S^3

@dataclass(frozen=True)
class NearlyKahlerReport:
    eigenvalues: np.ndarray
    recognized: tuple[tuple[Fraction, int], ...]
    trace_matrix: float
    trace_spectrum: Fraction
    einstein: float
    max_dev: float
    symmetric_residual: float

    @property
    def max_value(self) -> Fraction:
        return max(v for v, _ in self.recognized)


NEARLY_KAHLER_SPECTRUM = {Fraction(7, 24): 3, Fraction(1, 12): 7, Fraction(-1, 24): 5}


def nearly_kahler_s3s3(config: OracleConfig = DEFAULT, strict: bool = True) -> NearlyKahlerReport:
    """Curvature operator of ``SU(2)^3 / diag SU(2)`` with the normal metric from ``-B_g``.

    The metric is naturally reductive with Nomizu map ``L(X)Y = [X, Y]_p / 2``,
    giving ``R(X, Y) = [L(X), L(Y)] - L([X, Y]_p) - ad([X, Y]_h)`` on p.
    """
    so3 = build_algebra("so", 3, config)
    c = killing_fit(so3).constant  # so(3) = su(2): B = tr(XY), so -B is Frobenius
    E = so3.basis
    Z = np.zeros((3, 3))

    def block(x, y, w):
        return np.block([[x, Z, Z], [Z, y, Z], [Z, Z, w]])

    # h = diagonal, p = {(X, Y, -X-Y)}: orthonormal for -B_g = c * Frobenius
    h = [block(e, e, e) / math.sqrt(3) for e in E]
    p = [block(e, -e, Z) / math.sqrt(2) for e in E] + [block(e, e, -2 * e) / math.sqrt(6) for e in E]
    h = [x / math.sqrt(c) for x in h]
    p = [x / math.sqrt(c) for x in p]

    def metric(x, y):
        return -c * float(np.trace(x @ y))

    def proj(X, basis):
        return sum(metric(X, b) * b for b in basis)

    def br(x, y):
        return x @ y - y @ x

    def nomizu(X):
        return lambda Y: 0.5 * proj(br(X, Y), p)

    d = len(p)
    R = np.zeros((d, d, d, d))
    for i in range(d):
        for j in range(d):
            XY = br(p[i], p[j])
            XYp, XYh = proj(XY, p), proj(XY, h)
            for w in range(d):
                W = p[w]
                RW = (nomizu(p[i])(nomizu(p[j])(W)) - nomizu(p[j])(nomizu(p[i])(W))
                      - nomizu(XYp)(W) - br(XYh, W))
                for z in range(d):
                    R[i, j, z, w] = metric(RW, p[z])  # R(X, Y, Z, W) = g(R(X, Y) W, Z)
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    M = np.array([[R[i, j, k, l] for (k, l) in pairs] for (i, j) in pairs])
    sym = float(np.max(np.abs(M - M.T)))
    vals = np.linalg.eigvalsh((M + M.T) / 2)
    num = numeric_spectrum(vals, 0, config.max_denominator, config.tolerance)
    ric = sum(R[0, i, 0, i] for i in range(d))  # Ric(p_0, p_0); p_0 is a unit vector
    trace_spec = sum((v * m for v, m in num.recognized), Fraction(0))
    report = NearlyKahlerReport(vals, num.recognized, float(np.trace(M)), trace_spec, float(ric),
                                num.max_dev, sym)
    if strict and (dict(num.recognized) != NEARLY_KAHLER_SPECTRUM or num.unrecognized):
        raise SpectrumMismatch("S3xS3", NEARLY_KAHLER_SPECTRUM, dict(num.recognized), num.max_dev)
    return report
