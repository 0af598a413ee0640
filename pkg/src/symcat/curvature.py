"""Exact curvature-operator spectra and the theorem checkers.

With the metric induced by ``-B_g`` the curvature operator vanishes off the
holonomy algebra ``h`` inside ``Lambda^2 p`` and acts on each ideal of ``h``
by a scalar. ``spectrum`` assigns those scalars family by family from the
closed forms; ``formula_values`` evaluates every class formula that applies
to a descriptor so overlapping classes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .catalog import (
    EXCEPTIONAL,
    HERMITIAN_FAMILIES,
    SIMPLE_ISOTROPY_FAMILIES,
    IsotropyFactor,
    SpaceDescriptor,
    classify,
    dimension,
    has_simple_isotropy,
    is_semisimple,
    isotropy,
    so_factors,
    sp_factors,
    su_factors,
)
from .poincare import poincare

__all__ = [
    "SpectrumEntry",
    "Spectrum",
    "spectrum",
    "formula_values",
    "trace_check",
    "Theorem1Report",
    "theorem1_check",
    "theorem2_check",
    "theorem3_check",
    "hermitian_quadruple_coincidence",
]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class SpectrumEntry:
    value: Fraction
    mult: int
    label: str
    center: bool = False
    raw: tuple[int, int] | None = field(default=None, compare=False)

    @property
    def raw_text(self) -> str:
        """Unreduced fraction as the formula produces it, e.g. ``10/24``."""
        n, d = self.raw or (self.value.numerator, self.value.denominator)
        return f"{n}/{d}"


@dataclass(frozen=True)
class Spectrum:
    """Nonzero part of the curvature operator, one entry per isotropy ideal.

    ``zero_multiplicity`` is the dimension of the complement of ``h`` in
    ``Lambda^2 p``.
    """

    dim_m: int
    entries: tuple[SpectrumEntry, ...]

    @property
    def dim_h(self) -> int:
        return sum(e.mult for e in self.entries)

    @property
    def zero_multiplicity(self) -> int:
        return comb(self.dim_m, 2) - self.dim_h

    def values(self) -> dict[Fraction, int]:
        """Eigenvalue -> multiplicity, including the zero block, all reduced."""
        out: dict[Fraction, int] = {}
        for e in self.entries:
            out[e.value] = out.get(e.value, 0) + e.mult
        if self.zero_multiplicity:
            out[Fraction(0)] = out.get(Fraction(0), 0) + self.zero_multiplicity
        return dict(sorted(out.items(), reverse=True))

    def nonzero_values(self) -> set[Fraction]:
        return {e.value for e in self.entries if e.value != 0}

    @property
    def max_value(self) -> Fraction:
        return max(e.value for e in self.entries)

    def to_json(self, space: str) -> dict:
        return {
            "space": space,
            "entries": [
                {"value": f"{e.value.numerator}/{e.value.denominator}", "mult": e.mult, "factor": e.label}
                for e in self.entries
            ],
            "zero_mult": self.zero_multiplicity,
        }


def _entries(factors: list[IsotropyFactor], num: int, den: int) -> list[SpectrumEntry]:
    value = Fraction(num, den)
    return [SpectrumEntry(value, f.dim, f.label, f.kind == "center_u1") for f in factors]


def _so_sizes(s: SpaceDescriptor) -> tuple[tuple[int, str], tuple[int, str]] | None:
    """Block sizes (p, q) of SO(p+q)/(SO(p) x SO(q)) with their labels."""
    fam, ps = s.family, s.params
    if fam == "Sphere":
        return (1, "so(1)"), (ps[0], f"so({ps[0]})")
    if fam == "RealGrassB":
        k, l = ps
        return (2 * k, "so(2k)"), (2 * l + 1, "so(2l+1)")
    if fam == "RealGrassDOdd":
        k, l = ps
        return (2 * k + 1, "so(2k+1)"), (2 * l + 1, "so(2l+1)")
    if fam == "RealGrassDEven":
        k, l = ps
        return (2 * k, "so(2k)"), (2 * l, "so(2l)")
    return None


def grassmannian_values(s: SpaceDescriptor) -> list[SpectrumEntry] | None:
    fam, ps = s.family, s.params
    if fam == "CpxGrass":
        p, q = ps
        return (
            [SpectrumEntry(HALF, 1, "u(1)", True, (1, 2))]
            + _entries(su_factors(p, "su(p)"), q, 2 * (p + q))
            + _entries(su_factors(q, "su(q)"), p, 2 * (p + q))
        )
    if fam == "QuatGrass":
        p, q = ps
        return _entries(sp_factors(p, "sp(p)"), q, 2 * (p + q + 1)) + _entries(
            sp_factors(q, "sp(q)"), p, 2 * (p + q + 1)
        )
    sizes = _so_sizes(s)
    if sizes is None:
        return None
    (p, lp), (q, lq) = sizes
    if s.family == "Sphere":
        lq = None
    out = _entries(so_factors(p, lp), q, 2 * (p + q - 2))
    out += _entries(so_factors(q, lq), p, 2 * (p + q - 2))
    return out


def simple_isotropy_values(s: SpaceDescriptor) -> list[SpectrumEntry] | None:
    """``1/4 dim M / dim h`` on every ideal, for spaces whose ideals share one eigenvalue."""
    iso = isotropy(s)
    if iso.center_dim:
        return None
    return _entries(list(iso), dimension(s), 4 * iso.dim)


def hermitian_values(s: SpaceDescriptor) -> list[SpectrumEntry] | None:
    """``1/2`` on the center and ``1/4 (dim M - 2) / dim h_1`` on a single other ideal."""
    iso = isotropy(s)
    rest = [f for f in iso if f.kind != "center_u1"]
    if iso.center_dim != 1 or len(rest) > 1:
        return None
    out = [SpectrumEntry(HALF, 1, f.label, True, (1, 2)) for f in iso if f.kind == "center_u1"]
    if rest:
        out += _entries(rest, dimension(s) - 2, 4 * rest[0].dim)
    return out


def wolf_sp1_label(s: SpaceDescriptor) -> str:
    """Label of the ideal carrying the quaternionic sp(1) eigenvalue."""
    fam = s.family
    if fam in EXCEPTIONAL:
        return isotropy(s).factors[0].label
    if fam == "QuatGrass":
        return "sp(p)"
    if fam == "CpxGrass":
        return "su(p)"
    # real Grassmannians of 4-planes: one of the two su(2) ideals of so(4)
    return "so(2k)+" if s.params[0] == 2 else "so(2l)+"


def wolf_values(s: SpaceDescriptor) -> dict[str, Fraction] | None:
    """Wolf formula on dim 4n: sp(1) -> n/(2(n+2)), a lone remaining simple ideal h_2 -> that times (2n+1)/dim h_2.

    Returns label -> value only for the ideals the formula determines.
    """
    if not classify(s).is_wolf:
        return None
    d = dimension(s)
    if d % 4:
        raise ValueError(f"Wolf space {s} of dimension {d} not divisible by 4")
    n = d // 4
    lam1 = HALF * Fraction(n, n + 2)
    sp1 = wolf_sp1_label(s)
    out = {sp1: lam1}
    rest = [f for f in isotropy(s) if f.label != sp1]
    if len(rest) == 1 and rest[0].kind == "simple":
        out[rest[0].label] = lam1 * Fraction(2 * n + 1, rest[0].dim)
    return out


def wolf_raw(s: SpaceDescriptor) -> dict[str, tuple[int, int]]:
    """Unreduced Wolf fractions ``n / (2(n+2))`` and ``n(2n+1) / (2(n+2) dim h_2)``."""
    n = dimension(s) // 4
    sp1 = wolf_sp1_label(s)
    out = {sp1: (n, 2 * (n + 2))}
    for f in isotropy(s):
        if f.label != sp1:
            out[f.label] = (n * (2 * n + 1), 2 * (n + 2) * f.dim)
    return out


_G2I = [SpectrumEntry(QUARTER, 3, "sp(1)", raw=(1, 4)), SpectrumEntry(Fraction(5, 12), 3, "su(2)", raw=(5, 12))]


def spectrum(s: SpaceDescriptor) -> Spectrum:
    """Exact spectrum of the curvature operator on ``Lambda^2 p``.

    Precedence: type II, G2I, Grassmannian, Hermitian, simple isotropy, Wolf.
    The non-semisimple group entries U(n) and SO(2) report only the
    semisimple part of their holonomy; the center acts trivially.
    """
    fam = s.family
    dm = dimension(s)
    if fam == "TypeII":
        entries = [e for e in _entries(list(isotropy(s)), 1, 4) if not e.center]
    elif fam == "G2I":
        entries = list(_G2I)
    elif fam in ("Sphere", "CpxGrass", "QuatGrass", "RealGrassB", "RealGrassDOdd", "RealGrassDEven"):
        entries = grassmannian_values(s)
    elif fam in HERMITIAN_FAMILIES:
        entries = hermitian_values(s)
    elif fam in SIMPLE_ISOTROPY_FAMILIES:
        entries = simple_isotropy_values(s)
    else:
        raw = wolf_raw(s)
        sp1 = wolf_sp1_label(s)
        # only the sp(1) value is quoted unreduced in the tables (10/24, 16/36, 28/60)
        entries = [SpectrumEntry(Fraction(*raw[f.label]), f.dim, f.label, raw=raw[f.label] if f.label == sp1 else None)
                   for f in isotropy(s)]
    return Spectrum(dm, tuple(entries))


def formula_values(s: SpaceDescriptor) -> dict[str, dict[str, Fraction]]:
    """Every class formula applicable to ``s`` as ``{formula: {label: value}}``."""
    out: dict[str, dict[str, Fraction]] = {}
    g = grassmannian_values(s)
    if g is not None:
        out["grassmannian"] = {e.label: e.value for e in g}
    if has_simple_isotropy(s) or s.family in SIMPLE_ISOTROPY_FAMILIES:
        out["simple-isotropy"] = {e.label: e.value for e in simple_isotropy_values(s)}
    if s.family != "TypeII":
        h = hermitian_values(s)
        if h is not None:
            out["hermitian"] = {e.label: e.value for e in h}
    w = wolf_values(s)
    if w is not None:
        out["wolf"] = w
    return out


def trace_check(s: SpaceDescriptor, spec: Spectrum | None = None) -> bool:
    """``dim M / 2 == dim h_0 + 2 sum lambda_i dim h_i`` in exact arithmetic."""
    spec = spec or spectrum(s)
    centers = [e for e in spec.entries if e.center]
    if any(e.value != HALF for e in centers):
        return False
    rhs = sum(e.mult for e in centers) + 2 * sum(e.value * e.mult for e in spec.entries if not e.center)
    return Fraction(spec.dim_m, 2) == rhs


@dataclass(frozen=True)
class Theorem1Report:
    in_range: bool
    distinct_nonzero: int
    rational: bool
    three_only_on_grassmannians: bool

    @property
    def ok(self) -> bool:
        return (self.in_range and self.rational and 1 <= self.distinct_nonzero <= 3
                and self.three_only_on_grassmannians)


def theorem1_check(s: SpaceDescriptor) -> Theorem1Report:
    spec = spectrum(s)
    vals = [e.value for e in spec.entries]
    distinct = len(spec.nonzero_values())
    expect_three = s.family == "CpxGrass" and 2 <= s.params[0] < s.params[1]
    return Theorem1Report(
        in_range=all(0 <= v <= HALF for v in vals),
        distinct_nonzero=distinct,
        rational=all(isinstance(v, Fraction) for v in vals),
        three_only_on_grassmannians=(distinct == 3) == expect_three,
    )


def theorem2_check(s: SpaceDescriptor) -> bool:
    """(max eigenvalue 1/2) <=> Hermitian <=> b_2 = 1, with the 1/2 eigenvalue of multiplicity one."""
    spec = spectrum(s)
    top = spec.max_value == HALF
    herm = classify(s).is_hermitian
    b2 = poincare(s).b(2)
    if not (top == herm == (b2 == 1)):
        return False
    if b2 not in (0, 1):
        return False
    if top:
        return sum(e.mult for e in spec.entries if e.value == HALF) == 1
    return True


def theorem3_check(s: SpaceDescriptor) -> bool:
    """Simple isotropy: lambda = dim M / (4 dim h); groups have b_3 = 1, the rest b_2 = b_3 = b_4 = 0.

    The eigenvalue statement is also checked on the members of the
    simple-isotropy table whose isotropy is not simple (SU(4)/SO(4)).
    Vacuously true elsewhere.
    """
    structural = has_simple_isotropy(s)
    if not (structural or s.family in SIMPLE_ISOTROPY_FAMILIES):
        return True
    spec = spectrum(s)
    dm, dh = dimension(s), isotropy(s).dim
    lam = QUARTER * Fraction(dm, dh)
    if any(e.value != lam for e in spec.entries):
        return False
    if (lam == QUARTER) != (dm == dh):
        return False
    if not structural:
        return True
    pr = poincare(s)
    if dm == dh:
        return pr.b(3) == 1
    return pr.b(2) == pr.b(3) == pr.b(4) == 0


def hermitian_quadruple_coincidence() -> list[SpaceDescriptor]:
    """The four Hermitian spaces whose nonzero eigenvalues are exactly {1/2, 1/6}."""
    return [
        SpaceDescriptor.of("CpxGrass", 1, 2),
        SpaceDescriptor.of("RealGrassDEven", 1, 3),
        SpaceDescriptor.of("E6III"),
        SpaceDescriptor.of("E7VII"),
    ]


def is_checked_by_theorems(s: SpaceDescriptor) -> bool:
    return is_semisimple(s)
