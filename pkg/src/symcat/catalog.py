"""Compact irreducible symmetric spaces as (family, parameters) descriptors.

Everything here is Lie-algebra level: dimensions come from ``dim g - dim h``
and isotropy factors from the standard dimension formulas, never from a
transcribed table. Finite quotients in the exceptional isotropy groups
(``/Z2``, ``/{+-I}``, ...) are kept as display metadata only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "GroupType",
    "DegreeData",
    "IsotropyFactor",
    "IsotropyDecomposition",
    "SpaceDescriptor",
    "ClassFlags",
    "InvalidDescriptor",
    "UnknownSpace",
    "FAMILIES",
    "EXCEPTIONAL",
    "algebra_dim",
    "degrees",
    "dimension",
    "degree_data",
    "isotropy",
    "classify",
    "enumerate_spaces",
    "parse_space",
    "space_id",
    "catalog_entry",
]


class InvalidDescriptor(ValueError):
    """Parameters outside the range where the family is a compact irreducible symmetric space."""


class UnknownSpace(ValueError):
    def __init__(self, text: str, suggestions: list[str] | None = None):
        self.text = text
        self.suggestions = suggestions or []
        msg = f"unknown space id {text!r}"
        if self.suggestions:
            msg += "; did you mean: " + ", ".join(self.suggestions)
        super().__init__(msg)


EXCEPTIONAL_DIMS = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}
EXCEPTIONAL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}
SERIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "U", "SO2")


def algebra_dim(series: str, n: int = 0) -> int:
    if series == "A":
        return n * (n + 2)
    if series in ("B", "C"):
        return n * (2 * n + 1)
    if series == "D":
        return n * (2 * n - 1)
    if series == "U":
        return n * n
    if series == "SO2":
        return 1
    return EXCEPTIONAL_DIMS[series]


@dataclass(frozen=True, order=True)
class GroupType:
    """A compact Lie group by Cartan series; ``n`` is ignored for exceptional series and SO(2)."""

    series: str
    n: int = 0

    def __post_init__(self):
        if self.series not in SERIES:
            raise InvalidDescriptor(f"unknown series {self.series!r}")
        if self.series in EXCEPTIONAL_DIMS or self.series == "SO2":
            object.__setattr__(self, "n", 0)
            return
        lo = {"A": 1, "B": 1, "C": 1, "D": 2, "U": 1}[self.series]
        if self.n < lo:
            raise InvalidDescriptor(f"{self.series}{self.n}: rank below {lo}")

    @property
    def dim(self) -> int:
        return algebra_dim(self.series, self.n)

    @property
    def rank(self) -> int:
        if self.series in EXCEPTIONAL_DEGREES:
            return len(EXCEPTIONAL_DEGREES[self.series])
        return 1 if self.series == "SO2" else self.n

    @property
    def is_simple(self) -> bool:
        return self.series not in ("U", "SO2") and not (self.series == "D" and self.n == 2)

    @property
    def name(self) -> str:
        if self.series in EXCEPTIONAL_DIMS or self.series == "SO2":
            return self.series
        return f"{self.series}{self.n}"

    @property
    def matrix_name(self) -> str:
        s, n = self.series, self.n
        return {
            "A": f"SU({n + 1})",
            "B": f"SO({2 * n + 1})",
            "C": f"Sp({n})",
            "D": f"SO({2 * n})",
            "U": f"U({n})",
            "SO2": "SO(2)",
        }.get(s, s)


def degrees(g: GroupType) -> tuple[int, ...]:
    """Degrees of the basic invariant polynomials, one per unit of rank."""
    s, n = g.series, g.n
    if s == "A":
        return tuple(range(2, n + 2))
    if s == "U":
        return tuple(range(1, n + 1))
    if s in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if s == "D":
        return (n,) + tuple(range(2, 2 * n - 1, 2))
    if s == "SO2":
        return (1,)
    return EXCEPTIONAL_DEGREES[s]


def so_group(m: int) -> list[GroupType]:
    """SO(m) as a group type; empty for m <= 1."""
    if m <= 1:
        return []
    if m == 2:
        return [GroupType("SO2")]
    if m % 2:
        return [GroupType("B", (m - 1) // 2)]
    return [GroupType("D", m // 2)]


@dataclass(frozen=True)
class DegreeData:
    d_g: tuple[int, ...]
    d_h: tuple[int, ...]
    d_g1: tuple[int, ...]
    d_g0: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("d_g", "d_h", "d_g1", "d_g0"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))
        if tuple(sorted(self.d_g1 + self.d_g0)) != self.d_g:
            raise ValueError(f"split {self.d_g1} + {self.d_g0} is not D_G = {self.d_g}")

    @property
    def equal_rank(self) -> bool:
        return not self.d_g0


@dataclass(frozen=True)
class IsotropyFactor:
    """One ideal of the isotropy algebra.

    ``kind`` is ``"center_u1"`` or ``"simple"``. so(4) is stored as two
    ``A1`` factors sharing the ``so(4)`` label stem, since it is not simple.
    """

    kind: str
    label: str
    series: str = ""
    rank: int = 0

    @property
    def dim(self) -> int:
        if self.kind == "center_u1":
            return 1
        return algebra_dim(self.series, self.rank)


U1 = "center_u1"


def _simple(label: str, series: str, rank: int = 0) -> IsotropyFactor:
    return IsotropyFactor("simple", label, series, rank)


def so_factors(m: int, label: str | None = None) -> list[IsotropyFactor]:
    label = label or f"so({m})"
    if m <= 1:
        return []
    if m == 2:
        return [IsotropyFactor(U1, label)]
    if m == 3:
        return [_simple(label, "A", 1)]
    if m == 4:
        return [_simple(label + "+", "A", 1), _simple(label + "-", "A", 1)]
    if m % 2:
        return [_simple(label, "B", (m - 1) // 2)]
    return [_simple(label, "D", m // 2)]


def su_factors(m: int, label: str | None = None) -> list[IsotropyFactor]:
    return [_simple(label or f"su({m})", "A", m - 1)] if m >= 2 else []


def sp_factors(m: int, label: str | None = None) -> list[IsotropyFactor]:
    return [_simple(label or f"sp({m})", "C", m)] if m >= 1 else []


@dataclass(frozen=True)
class IsotropyDecomposition:
    factors: tuple[IsotropyFactor, ...]

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def center_dim(self) -> int:
        return sum(1 for f in self.factors if f.kind == U1)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


# Family tag -> (parameter names, section in the tables)
FAMILIES: dict[str, tuple[str, ...]] = {
    "TypeII": (),
    "Sphere": ("n",),
    "CpxGrass": ("p", "q"),
    "QuatGrass": ("p", "q"),
    "RealGrassB": ("k", "l"),
    "RealGrassDOdd": ("k", "l"),
    "RealGrassDEven": ("k", "l"),
    "AI": ("n",),
    "AII": ("n",),
    "CnI": ("n",),
    "DnIII": ("n",),
    "E6I": (),
    "E6IV": (),
    "E7V": (),
    "E8VIII": (),
    "F4II": (),
    "E6III": (),
    "E7VII": (),
    "E6II": (),
    "E7VI": (),
    "E8IX": (),
    "F4I": (),
    "G2I": (),
}

# Exceptional type I spaces: G, isotropy factors, isotropy group as printed, finite quotient.
EXCEPTIONAL: dict[str, dict] = {
    "E6I": dict(g="E6", h=[("sp(4)", "C", 4)], group="Sp(4)", quotient="{+-I}"),
    "E6IV": dict(g="E6", h=[("f4", "F4", 0)], group="F4", quotient=""),
    "E7V": dict(g="E7", h=[("su(8)", "A", 7)], group="SU(8)", quotient="{+-I}"),
    "E8VIII": dict(g="E8", h=[("so(16)", "D", 8)], group="Spin(16)", quotient="{+-vol}"),
    "F4II": dict(g="F4", h=[("so(9)", "B", 4)], group="Spin(9)", quotient=""),
    "E6III": dict(g="E6", h=[("so(2)", U1, 0), ("so(10)", "D", 5)], group="SO(2)xSpin(10)", quotient="Z4"),
    "E7VII": dict(g="E7", h=[("so(2)", U1, 0), ("e6", "E6", 0)], group="SO(2)xE6", quotient="Z3"),
    "E6II": dict(g="E6", h=[("su(2)", "A", 1), ("su(6)", "A", 5)], group="SU(2)xSU(6)", quotient="Z2"),
    "E7VI": dict(g="E7", h=[("su(2)", "A", 1), ("so(12)", "D", 6)], group="SU(2)xSpin(12)", quotient="Z2"),
    "E8IX": dict(g="E8", h=[("su(2)", "A", 1), ("e7", "E7", 0)], group="SU(2)xE7", quotient="Z2"),
    "F4I": dict(g="F4", h=[("su(2)", "A", 1), ("sp(3)", "C", 3)], group="SU(2)xSp(3)", quotient="Z2"),
    "G2I": dict(g="G2", h=[("sp(1)", "A", 1), ("su(2)", "A", 1)], group="SO(4)", quotient=""),
}
# Isotropy subgroup degree data for the exceptional rows (group types of H).
_EXC_H_GROUPS = {
    "E6I": [GroupType("C", 4)],
    "E6IV": [GroupType("F4")],
    "E7V": [GroupType("A", 7)],
    "E8VIII": [GroupType("D", 8)],
    "F4II": [GroupType("B", 4)],
    "E6III": [GroupType("SO2"), GroupType("D", 5)],
    "E7VII": [GroupType("SO2"), GroupType("E6")],
    "E6II": [GroupType("A", 1), GroupType("A", 5)],
    "E7VI": [GroupType("A", 1), GroupType("D", 6)],
    "E8IX": [GroupType("A", 1), GroupType("E7")],
    "F4I": [GroupType("A", 1), GroupType("C", 3)],
    "G2I": [GroupType("A", 1), GroupType("A", 1)],
}
_EXC_SPLIT = {"E6I": (5, 9), "E6IV": (5, 9)}

HERMITIAN_FAMILIES = {"CnI", "DnIII", "E6III", "E7VII"}
SIMPLE_ISOTROPY_FAMILIES = {"AI", "AII", "E6I", "E6IV", "E7V", "E8VIII", "F4II"}
WOLF_EXCEPTIONAL = {"E6II", "E7VI", "E8IX", "F4I", "G2I"}
GRASSMANNIAN_FAMILIES = {"Sphere", "CpxGrass", "QuatGrass", "RealGrassB", "RealGrassDOdd", "RealGrassDEven"}


@dataclass(frozen=True, order=True)
class SpaceDescriptor:
    """A compact irreducible symmetric space: family tag plus integer parameters.

    ``TypeII`` carries its group in ``group``; every other family uses
    ``params`` in the order listed in :data:`FAMILIES`. Construction
    validates the parameter range and rejects swapped Grassmannian
    parameters instead of normalizing them.
    """

    family: str
    params: tuple[int, ...] = ()
    group: GroupType | None = field(default=None, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        _validate(self)

    # convenience constructors
    @classmethod
    def type_ii(cls, series: str, n: int = 0) -> SpaceDescriptor:
        return cls("TypeII", (), GroupType(series, n))

    @classmethod
    def of(cls, family: str, *params: int) -> SpaceDescriptor:
        return cls(family, tuple(params))

    def param(self, name: str) -> int:
        return self.params[FAMILIES[self.family].index(name)]

    def __str__(self) -> str:
        return space_id(self)


def _validate(s: SpaceDescriptor) -> None:
    fam, ps = s.family, s.params
    if fam not in FAMILIES:
        raise InvalidDescriptor(f"unknown family {fam!r}")
    if len(ps) != len(FAMILIES[fam]):
        raise InvalidDescriptor(f"{fam} takes parameters {FAMILIES[fam]}, got {ps}")
    if fam == "TypeII":
        g = s.group
        if g is None:
            raise InvalidDescriptor("TypeII needs a group")
        lo = {"A": 1, "B": 2, "C": 3, "D": 3, "U": 1}.get(g.series, 0)
        if g.n < lo:
            raise InvalidDescriptor(f"TypeII({g.name}) outside canonical range (rank >= {lo})")
        return
    if s.group is not None:
        raise InvalidDescriptor(f"{fam} does not take a group")

    def need(cond: bool, why: str):
        if not cond:
            raise InvalidDescriptor(f"{fam}{ps}: {why}")

    if fam == "Sphere":
        need(ps[0] >= 2, "n >= 2")
    elif fam in ("CpxGrass", "QuatGrass"):
        p, q = ps
        need(1 <= p <= q, "requires 1 <= p <= q")
    elif fam == "RealGrassB":
        k, l = ps
        need(k >= 1 and l >= 1, "requires k >= 1, l >= 1")
    elif fam == "RealGrassDOdd":
        k, l = ps
        need(1 <= k <= l, "requires 1 <= k <= l")
    elif fam == "RealGrassDEven":
        k, l = ps
        need(1 <= k <= l, "requires 1 <= k <= l")
        need((k, l) != (1, 1), "SO(4)/(SO(2)xSO(2)) is reducible")
    elif fam == "AI":
        need(ps[0] >= 3, "n >= 3")
    elif fam == "AII":
        need(ps[0] >= 2, "n >= 2")
    elif fam == "CnI":
        need(ps[0] >= 1, "n >= 1")
    elif fam == "DnIII":
        need(ps[0] >= 3, "n >= 3 (SO(4)/U(2) has non-effective isotropy)")


def _g_group(s: SpaceDescriptor) -> list[GroupType]:
    """Group types whose product is G."""
    fam = s.family
    if fam == "TypeII":
        return [s.group, s.group]
    if fam in EXCEPTIONAL:
        return [GroupType(EXCEPTIONAL[fam]["g"])]
    if fam == "Sphere":
        return so_group(s.params[0] + 1)
    if fam == "CpxGrass":
        p, q = s.params
        return [GroupType("A", p + q - 1)]
    if fam == "QuatGrass":
        p, q = s.params
        return [GroupType("C", p + q)]
    if fam == "RealGrassB":
        k, l = s.params
        return [GroupType("B", k + l)]
    if fam == "RealGrassDOdd":
        k, l = s.params
        return [GroupType("D", k + l + 1)]
    if fam == "RealGrassDEven":
        k, l = s.params
        return [GroupType("D", k + l)]
    n = s.params[0]
    series, rank = {"AI": ("A", n - 1), "AII": ("A", 2 * n - 1), "CnI": ("C", n), "DnIII": ("D", n)}[fam]
    return [GroupType(series, rank)]


def g_dim(s: SpaceDescriptor) -> int:
    return sum(g.dim for g in _g_group(s))


def isotropy(s: SpaceDescriptor) -> IsotropyDecomposition:
    fam = s.family
    if fam == "TypeII":
        g = s.group
        if g.series == "U":
            fs = [IsotropyFactor(U1, "u(1)")] + su_factors(g.n, f"su({g.n})")
        elif g.series == "SO2":
            fs = [IsotropyFactor(U1, "so(2)")]
        else:
            fs = [_simple(_g_label(g), g.series, g.n)]
    elif fam in EXCEPTIONAL:
        fs = []
        for label, series, rank in EXCEPTIONAL[fam]["h"]:
            fs.append(IsotropyFactor(U1, label) if series == U1 else _simple(label, series, rank))
    elif fam == "Sphere":
        fs = so_factors(s.params[0])
    elif fam == "CpxGrass":
        p, q = s.params
        fs = [IsotropyFactor(U1, "u(1)")] + su_factors(p, "su(p)") + su_factors(q, "su(q)")
    elif fam == "QuatGrass":
        p, q = s.params
        fs = sp_factors(p, "sp(p)") + sp_factors(q, "sp(q)")
    elif fam == "RealGrassB":
        k, l = s.params
        fs = so_factors(2 * k, "so(2k)") + so_factors(2 * l + 1, "so(2l+1)")
    elif fam == "RealGrassDOdd":
        k, l = s.params
        fs = so_factors(2 * k + 1, "so(2k+1)") + so_factors(2 * l + 1, "so(2l+1)")
    elif fam == "RealGrassDEven":
        k, l = s.params
        fs = so_factors(2 * k, "so(2k)") + so_factors(2 * l, "so(2l)")
    elif fam == "AI":
        fs = so_factors(s.params[0])
    elif fam == "AII":
        fs = sp_factors(s.params[0])
    elif fam in ("CnI", "DnIII"):
        n = s.params[0]
        fs = [IsotropyFactor(U1, "u(1)")] + su_factors(n)
    else:  # pragma: no cover - guarded by FAMILIES
        raise InvalidDescriptor(fam)
    return IsotropyDecomposition(tuple(fs))


def _g_label(g: GroupType) -> str:
    s, n = g.series, g.n
    return {
        "A": f"su({n + 1})",
        "B": f"so({2 * n + 1})",
        "C": f"sp({n})",
        "D": f"so({2 * n})",
    }.get(s, s.lower())


def dimension(s: SpaceDescriptor) -> int:
    if s.family == "TypeII":
        return s.group.dim
    return g_dim(s) - isotropy(s).dim


def _h_groups(s: SpaceDescriptor) -> list[GroupType]:
    fam = s.family
    if fam == "TypeII":
        return [s.group]
    if fam in _EXC_H_GROUPS:
        return list(_EXC_H_GROUPS[fam])
    if fam == "Sphere":
        return so_group(s.params[0])
    if fam == "CpxGrass":
        p, q = s.params
        return [GroupType("U", p), GroupType("U", q)]
    if fam == "QuatGrass":
        p, q = s.params
        return [GroupType("C", p), GroupType("C", q)]
    if fam == "RealGrassB":
        k, l = s.params
        return so_group(2 * k) + so_group(2 * l + 1)
    if fam == "RealGrassDOdd":
        k, l = s.params
        return so_group(2 * k + 1) + so_group(2 * l + 1)
    if fam == "RealGrassDEven":
        k, l = s.params
        return so_group(2 * k) + so_group(2 * l)
    n = s.params[0]
    if fam == "AI":
        return so_group(n)
    if fam == "AII":
        return [GroupType("C", n)]
    return [GroupType("U", n)]  # CnI, DnIII


def degree_data(s: SpaceDescriptor) -> DegreeData:
    """Degrees of G and H with the split of D_G into surviving and vanishing parts."""
    fam = s.family
    h = tuple(d for g in _h_groups(s) for d in degrees(g))
    if fam == "TypeII":
        dg = degrees(s.group)
        # (G x G)/diag G: one copy pairs with H, the other copy vanishes on H.
        return DegreeData(dg + dg, dg, dg, dg)
    if fam == "CpxGrass":
        # U(p+q)/(U(p) x U(q)) has the same rational cohomology and equal rank.
        p, q = s.params
        g = degrees(GroupType("U", p + q))
        return DegreeData(g, h, g)
    g = tuple(d for grp in _g_group(s) for d in degrees(grp))
    if fam in ("CnI", "DnIII"):
        return DegreeData(g, h, g)
    if fam in _EXC_SPLIT:
        g0 = _EXC_SPLIT[fam]
        return DegreeData(g, h, _remove(g, g0), g0)
    if fam == "Sphere" and s.params[0] % 2:
        j = (s.params[0] - 1) // 2
        return DegreeData(g, h, _remove(g, (j + 1,)), (j + 1,))
    if fam == "RealGrassDOdd":
        k, l = s.params
        return DegreeData(g, h, _remove(g, (k + l + 1,)), (k + l + 1,))
    if fam == "AI":
        n = s.params[0]
        g1 = tuple(range(2, n + 1, 2))
        return DegreeData(g, h, g1, _remove(g, g1))
    if fam == "AII":
        n = s.params[0]
        g1 = tuple(range(2, 2 * n + 1, 2))
        return DegreeData(g, h, g1, _remove(g, g1))
    return DegreeData(g, h, g)


def _remove(seq: tuple[int, ...], drop: tuple[int, ...]) -> tuple[int, ...]:
    out = list(seq)
    for d in drop:
        out.remove(d)
    return tuple(out)


@dataclass(frozen=True)
class ClassFlags:
    is_type_ii: bool
    is_hermitian: bool
    is_wolf: bool
    is_simple_isotropy: bool
    is_grassmannian: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)

    def classes(self) -> list[str]:
        names = [("is_type_ii", "groups"), ("is_grassmannian", "grassmannians"),
                 ("is_simple_isotropy", "simple-isotropy"), ("is_hermitian", "hermitian"),
                 ("is_wolf", "wolf")]
        return [label for attr, label in names if getattr(self, attr)]


def is_wolf(s: SpaceDescriptor) -> bool:
    fam = s.family
    if fam in WOLF_EXCEPTIONAL:
        return True
    if fam == "QuatGrass":
        return s.params[0] == 1
    if fam == "CpxGrass":
        return s.params[0] == 2
    if fam == "RealGrassB":
        return s.params[0] == 2
    if fam == "RealGrassDEven":
        k, l = s.params
        return k == 2 or (k == 1 and l == 2)
    return False


def classify(s: SpaceDescriptor) -> ClassFlags:
    """Class flags; the five classes overlap (e.g. CpxGrass(2, q) is Hermitian and Wolf)."""
    iso = isotropy(s)
    fam = s.family
    return ClassFlags(
        is_type_ii=fam == "TypeII",
        is_hermitian=iso.center_dim > 0 and fam != "TypeII",
        is_wolf=is_wolf(s),
        is_simple_isotropy=fam in SIMPLE_ISOTROPY_FAMILIES,
        is_grassmannian=fam in GRASSMANNIAN_FAMILIES,
    )


def has_simple_isotropy(s: SpaceDescriptor) -> bool:
    """True when the isotropy algebra is a single simple ideal (structural, not by family)."""
    iso = isotropy(s)
    return len(iso) == 1 and iso.factors[0].kind == "simple"


def is_semisimple(s: SpaceDescriptor) -> bool:
    return s.family != "TypeII" or s.group.is_simple


# ---------------------------------------------------------------- enumeration

_FAMILY_ORDER = list(FAMILIES)


def _grow(make, *ranges) -> Iterator[SpaceDescriptor]:
    for args in ranges:
        try:
            yield make(*args)
        except InvalidDescriptor:
            continue


def enumerate_spaces(max_dim: int, include_nonsemisimple: bool = False) -> list[SpaceDescriptor]:
    """All descriptors of dimension <= max_dim, ordered by family tag then parameters.

    U(n) and SO(2) group entries are non-semisimple and only listed with
    ``include_nonsemisimple``.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    out: list[SpaceDescriptor] = []

    def add(s: SpaceDescriptor) -> bool:
        if dimension(s) <= max_dim:
            out.append(s)
            return True
        return False

    # Type II: series in table order, rank increasing until the dimension overflows.
    for series in ("A", "B", "C", "D", "U"):
        if series == "U" and not include_nonsemisimple:
            continue
        n = {"A": 1, "B": 2, "C": 3, "D": 3, "U": 1}[series]
        while add(SpaceDescriptor.type_ii(series, n)):
            n += 1
    if include_nonsemisimple:
        add(SpaceDescriptor.type_ii("SO2"))
    for series in ("E6", "E7", "E8", "F4", "G2"):
        add(SpaceDescriptor.type_ii(series))

    n = 2
    while add(SpaceDescriptor.of("Sphere", n)):
        n += 1
    for fam in ("CpxGrass", "QuatGrass"):
        p = 1
        while True:
            q = p
            while add(SpaceDescriptor.of(fam, p, q)):
                q += 1
            if q == p:
                break
            p += 1
    # B(k, l): dimension 2k(2l+1) grows in both; scan k until even l=1 overflows.
    k = 1
    while dimension(SpaceDescriptor.of("RealGrassB", k, 1)) <= max_dim:
        l = 1
        while add(SpaceDescriptor.of("RealGrassB", k, l)):
            l += 1
        k += 1
    for fam in ("RealGrassDOdd", "RealGrassDEven"):
        k = 1
        while True:
            added = False
            l = max(k, 2 if (fam == "RealGrassDEven" and k == 1) else k)
            while add(SpaceDescriptor.of(fam, k, l)):
                added = True
                l += 1
            if not added:
                break
            k += 1
    for fam, start in (("AI", 3), ("AII", 2), ("CnI", 1), ("DnIII", 3)):
        n = start
        while add(SpaceDescriptor.of(fam, n)):
            n += 1
    for fam in EXCEPTIONAL:
        add(SpaceDescriptor.of(fam))

    out.sort(key=_sort_key)
    return out


def _sort_key(s: SpaceDescriptor):
    g = s.group
    gkey = (SERIES.index(g.series), g.n) if g else (0, 0)
    return (_FAMILY_ORDER.index(s.family), gkey, s.params)


# ---------------------------------------------------------------- ids

_ROMAN_EXC = {
    "E6I": "E6-I", "E6IV": "E6-IV", "E7V": "E7-V", "E8VIII": "E8-VIII", "F4II": "F4-II",
    "E6III": "E6-III", "E7VII": "E7-VII", "E6II": "E6-II", "E7VI": "E7-VI", "E8IX": "E8-IX",
    "F4I": "F4-I", "G2I": "G2-I",
}


def space_id(s: SpaceDescriptor) -> str:
    """Canonical CLI id, e.g. ``A3-III-p2``, ``sphere-7``, ``E6-I``, ``B-grass-k2-l3``."""
    fam, ps = s.family, s.params
    if fam == "TypeII":
        return s.group.name
    if fam in _ROMAN_EXC:
        return _ROMAN_EXC[fam]
    if fam == "Sphere":
        return f"sphere-{ps[0]}"
    if fam == "CpxGrass":
        p, q = ps
        return f"A{p + q - 1}-III-p{p}"
    if fam == "QuatGrass":
        p, q = ps
        return f"C{p + q}-II-p{p}"
    if fam == "RealGrassB":
        return f"B-grass-k{ps[0]}-l{ps[1]}"
    if fam == "RealGrassDOdd":
        return f"D-grass-odd-k{ps[0]}-l{ps[1]}"
    if fam == "RealGrassDEven":
        return f"D-grass-even-k{ps[0]}-l{ps[1]}"
    n = ps[0]
    return {
        "AI": f"A{n - 1}-I",
        "AII": f"A{2 * n - 1}-II",
        "CnI": f"C{n}-I",
        "DnIII": f"D{n}-III",
    }[fam]


_ID_PATTERNS: list[tuple[re.Pattern, object]] = [
    (re.compile(r"^sphere-(\d+)$"), lambda m: SpaceDescriptor.of("Sphere", int(m[1]))),
    (re.compile(r"^a(\d+)-iii-p(\d+)$"),
     lambda m: SpaceDescriptor.of("CpxGrass", int(m[2]), int(m[1]) + 1 - int(m[2]))),
    (re.compile(r"^c(\d+)-ii-p(\d+)$"),
     lambda m: SpaceDescriptor.of("QuatGrass", int(m[2]), int(m[1]) - int(m[2]))),
    (re.compile(r"^b-grass-k(\d+)-l(\d+)$"), lambda m: SpaceDescriptor.of("RealGrassB", int(m[1]), int(m[2]))),
    (re.compile(r"^d-grass-odd-k(\d+)-l(\d+)$"),
     lambda m: SpaceDescriptor.of("RealGrassDOdd", int(m[1]), int(m[2]))),
    (re.compile(r"^d-grass-even-k(\d+)-l(\d+)$"),
     lambda m: SpaceDescriptor.of("RealGrassDEven", int(m[1]), int(m[2]))),
    (re.compile(r"^a(\d+)-i$"), lambda m: SpaceDescriptor.of("AI", int(m[1]) + 1)),
    (re.compile(r"^a(\d+)-ii$"), lambda m: _aii(int(m[1]))),
    (re.compile(r"^c(\d+)-i$"), lambda m: SpaceDescriptor.of("CnI", int(m[1]))),
    (re.compile(r"^d(\d+)-iii$"), lambda m: SpaceDescriptor.of("DnIII", int(m[1]))),
    (re.compile(r"^cp-?(\d+)$"), lambda m: SpaceDescriptor.of("CpxGrass", 1, int(m[1]))),
    (re.compile(r"^hp-?(\d+)$"), lambda m: SpaceDescriptor.of("QuatGrass", 1, int(m[1]))),
    (re.compile(r"^([abcdu])(\d+)$"), lambda m: SpaceDescriptor.type_ii(m[1].upper(), int(m[2]))),
    (re.compile(r"^(e6|e7|e8|f4|g2|so2)$"), lambda m: SpaceDescriptor.type_ii(m[1].upper())),
]


def _aii(odd: int) -> SpaceDescriptor:
    if odd % 2 == 0:
        raise InvalidDescriptor(f"A{odd}-II: subscript must be odd (A_(2n-1) II)")
    return SpaceDescriptor.of("AII", (odd + 1) // 2)


def parse_space(text: str) -> SpaceDescriptor:
    """Parse a CLI space id (case-insensitive). Raises :class:`UnknownSpace`."""
    key = text.strip().lower()
    for fam, rid in _ROMAN_EXC.items():
        if key == rid.lower() or key == fam.lower():
            return SpaceDescriptor.of(fam)
    for pat, make in _ID_PATTERNS:
        m = pat.match(key)
        if m:
            try:
                return make(m)
            except InvalidDescriptor as exc:
                raise UnknownSpace(text, [str(exc)]) from exc
    raise UnknownSpace(text, _suggest(key))


def _suggest(key: str) -> list[str]:
    import difflib

    pool = [space_id(s) for s in enumerate_spaces(64)]
    pool += ["sphere-<n>", "A<n>-III-p<p>", "C<n>-II-p<p>", "B-grass-k<k>-l<l>",
             "D-grass-odd-k<k>-l<l>", "D-grass-even-k<k>-l<l>", "A<n>-I", "A<2n-1>-II",
             "C<n>-I", "D<n>-III"]
    lower = {p.lower(): p for p in pool}
    return [lower[m] for m in difflib.get_close_matches(key, list(lower), n=5, cutoff=0.5)]


def display_name(s: SpaceDescriptor) -> str:
    """Human-readable quotient, e.g. ``SU(5)/S(U(2)xU(3))``."""
    fam, ps = s.family, s.params
    if fam == "TypeII":
        g = s.group.matrix_name
        return f"({g}x{g})/{g}"
    if fam in EXCEPTIONAL:
        e = EXCEPTIONAL[fam]
        h = e["group"]
        if e["quotient"]:
            h = f"({h})/{e['quotient']}" if "x" in h else f"{h}/{e['quotient']}"
            return f"{e['g']}/({h})"
        return f"{e['g']}/{h}"
    if fam == "Sphere":
        return f"S^{ps[0]} = SO({ps[0] + 1})/SO({ps[0]})"
    if fam == "CpxGrass":
        p, q = ps
        if p == 1:
            return f"CP^{q}"
        return f"U({p + q})/(U({p})xU({q}))"
    if fam == "QuatGrass":
        p, q = ps
        if p == 1:
            return f"HP^{q}"
        return f"Sp({p + q})/(Sp({p})xSp({q}))"
    if fam == "RealGrassB":
        k, l = ps
        return f"SO({2 * k + 2 * l + 1})/(SO({2 * k})xSO({2 * l + 1}))"
    if fam == "RealGrassDOdd":
        k, l = ps
        return f"SO({2 * k + 2 * l + 2})/(SO({2 * k + 1})xSO({2 * l + 1}))"
    if fam == "RealGrassDEven":
        k, l = ps
        return f"SO({2 * k + 2 * l})/(SO({2 * k})xSO({2 * l}))"
    n = ps[0]
    return {
        "AI": f"SU({n})/SO({n})",
        "AII": f"SU({2 * n})/Sp({n})",
        "CnI": f"Sp({n})/U({n})",
        "DnIII": f"SO({2 * n})/U({n})",
    }[fam]


def catalog_entry(s: SpaceDescriptor) -> dict:
    """JSON-ready record ``{id, family, params, dim, class_flags, isotropy}``."""
    names = FAMILIES[s.family]
    params = {"group": s.group.name} if s.family == "TypeII" else dict(zip(names, s.params))
    return {
        "id": space_id(s),
        "family": s.family,
        "params": params,
        "dim": dimension(s),
        "class_flags": classify(s).as_dict(),
        "isotropy": [{"kind": f.kind, "label": f.label, "dim": f.dim} for f in isotropy(s)],
    }
