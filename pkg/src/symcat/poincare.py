"""Poincare polynomials, Betti numbers and Euler characteristics.

Two independent routes are kept side by side. ``poincare`` runs the group
formula for type II entries and Takeuchi's quotient over the degree data
for everything else. ``closed_form`` builds the same polynomial from the
factored expressions printed in the tables (quantum numbers, Gaussian
binomials, ``1+t^d`` factors). The verification suite compares the two.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .catalog import (
    EXCEPTIONAL,
    DegreeData,
    GroupType,
    SpaceDescriptor,
    degree_data,
    degrees,
    dimension,
)
from .qpoly import (
    QPoly,
    eval_int,
    exact_div,
    gaussian_binomial,
    is_palindromic,
    product,
    quantum_number,
)

__all__ = [
    "RankMismatch",
    "PoincareResult",
    "group_poincare",
    "borel_poincare",
    "takeuchi_poincare",
    "poincare",
    "euler_both_ways",
    "wang_ratio",
    "ClosedForm",
    "closed_form",
]


class RankMismatch(ValueError):
    """Degree data whose paired sets do not have the same size."""


def one_plus(d: int) -> QPoly:
    return QPoly.one() + QPoly.monomial(d)


def group_poincare(g: GroupType) -> QPoly:
    """``prod (1 + t^(2k-1))`` over the degrees of ``g``."""
    return product(one_plus(2 * k - 1) for k in degrees(g))


def _qt2_product(ks) -> QPoly:
    return product(quantum_number(k, 2) for k in ks if k > 1)


def _qt2_quotient(num: tuple[int, ...], den: tuple[int, ...]) -> QPoly:
    """``prod [k]_{t^2} / prod [l]_{t^2}`` with one exact division.

    Identical factors on both sides are cancelled first; the rest is
    expanded separately and divided once.
    """
    left = Counter(num)
    right = Counter(den)
    common = left & right
    return exact_div(_qt2_product((left - common).elements()), _qt2_product((right - common).elements()))


def borel_poincare(d: DegreeData) -> QPoly:
    """Equal-rank quotient ``prod [k]_{t^2} / prod [l]_{t^2}``."""
    if d.d_g0:
        raise RankMismatch(f"Borel's formula needs equal rank; vanishing degrees {d.d_g0}")
    if len(d.d_g) != len(d.d_h):
        raise RankMismatch(f"|D_G| = {len(d.d_g)} but |D_H| = {len(d.d_h)}")
    return _checked(_qt2_quotient(d.d_g, d.d_h))


def takeuchi_poincare(d: DegreeData) -> QPoly:
    """``prod_{D_G^1}[k]_{t^2} / prod_{D_H}[l]_{t^2} * prod_{D_G^0}(1 + t^(2k-1))``."""
    if len(d.d_g1) != len(d.d_h):
        raise RankMismatch(f"|D_G^1| = {len(d.d_g1)} but |D_H| = {len(d.d_h)}")
    rational = _qt2_quotient(d.d_g1, d.d_h)
    return _checked(rational * product(one_plus(2 * k - 1) for k in d.d_g0))


def _checked(p: QPoly) -> QPoly:
    if not p.is_nonnegative_integral():
        raise ValueError(f"Poincare polynomial with non-integral or negative coefficients: {p}")
    return p


@dataclass(frozen=True)
class PoincareResult:
    chi_t: QPoly
    betti: tuple[int, ...]
    euler: int
    total_betti: int

    @classmethod
    def from_poly(cls, chi_t: QPoly) -> PoincareResult:
        betti = tuple(chi_t.int_coeffs())
        return cls(chi_t, betti, int(eval_int(chi_t, -1)), int(eval_int(chi_t, 1)))

    def b(self, i: int) -> int:
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    @property
    def palindromic(self) -> bool:
        return is_palindromic(self.chi_t)


def poincare(s: SpaceDescriptor) -> PoincareResult:
    if s.family == "TypeII":
        chi = group_poincare(s.group)
    else:
        chi = takeuchi_poincare(degree_data(s))
    if chi.degree != dimension(s):
        raise AssertionError(f"{s}: deg chi = {chi.degree} but dim = {dimension(s)}")
    return PoincareResult.from_poly(chi)


def wang_ratio(d: DegreeData) -> int | None:
    """``prod D_G / prod D_H`` for equal rank, otherwise None."""
    if d.d_g0 or len(d.d_g) != len(d.d_h):
        return None
    r = Fraction(prod(d.d_g), prod(d.d_h))
    if r.denominator != 1:
        raise ValueError(f"non-integral Wang ratio {r}")
    return int(r)


def euler_both_ways(s: SpaceDescriptor) -> tuple[int, int | None]:
    """``(chi(-1), prod k / prod l)``; the second is None for unequal rank."""
    return poincare(s).euler, wang_ratio(degree_data(s))


# ---------------------------------------------------------------- table closed forms

# Factor tokens: ("q", n, step) = [n]_{t^step}; ("e", d) = 1 + t^d;
# ("b", k, l, step) = binom(k+l, k)_{t^step}.


def _factor_poly(f: tuple) -> QPoly:
    if f[0] == "q":
        return quantum_number(f[1], f[2])
    if f[0] == "e":
        return one_plus(f[1])
    if f[0] == "b":
        return gaussian_binomial(f[1], f[2], f[3])
    raise ValueError(f)


def _factor_text(f: tuple, style: str) -> str:
    def pw(d):
        if style == "latex":
            return "t" if d == 1 else f"t^{{{d}}}"
        return "t" if d == 1 else f"t^{d}"

    if f[0] == "q":
        return f"[{f[1]}]_{{{pw(f[2])}}}" if style == "latex" else f"[{f[1]}]_{pw(f[2])}"
    if f[0] == "e":
        return f"(1+{pw(f[1])})"
    k, l, step = f[1:]
    if style == "latex":
        return f"\\binom{{{k + l}}}{{{k}}}_{{{pw(step)}}}"
    return f"binom({k + l},{k})_{pw(step)}"


def _trivial(f: tuple) -> bool:
    return (f[0] == "q" and f[1] == 1) or (f[0] == "b" and (f[1] == 0 or f[2] == 0))


@dataclass(frozen=True)
class ClosedForm:
    """A table expression ``prod(num) / prod(den)`` kept in factored form."""

    num: tuple[tuple, ...]
    den: tuple[tuple, ...] = ()

    def poly(self) -> QPoly:
        top = product(_factor_poly(f) for f in self.num)
        return exact_div(top, product(_factor_poly(f) for f in self.den))

    def format(self, style: str = "plain") -> str:
        num = [_factor_text(f, style) for f in self.num if not _trivial(f)]
        den = [_factor_text(f, style) for f in self.den if not _trivial(f)]
        top = "".join(num) or "1"
        if not den:
            return top
        if style == "latex":
            return f"\\frac{{{top}}}{{{''.join(den)}}}"
        return f"{top} / {''.join(den)}"


_EXCEPTIONAL_FORMS: dict[str, ClosedForm] = {
    "E6I": ClosedForm((("q", 3, 8), ("e", 9), ("e", 17))),
    "E6IV": ClosedForm((("e", 9), ("e", 17))),
    "E7V": ClosedForm((("q", 6, 6), ("q", 3, 8), ("q", 2, 10), ("q", 2, 14))),
    "E8VIII": ClosedForm((("q", 5, 8), ("q", 3, 12), ("q", 3, 16), ("q", 3, 20))),
    "F4II": ClosedForm((("q", 3, 8),)),
    "E6III": ClosedForm((("q", 9, 2), ("q", 3, 8))),
    "E7VII": ClosedForm((("q", 14, 2), ("q", 2, 10), ("q", 2, 18))),
    "E6II": ClosedForm((("q", 6, 4), ("q", 3, 6), ("q", 2, 8))),
    "E7VI": ClosedForm((("q", 7, 4), ("q", 3, 8), ("q", 3, 12))),
    "E8IX": ClosedForm((("q", 15, 4), ("q", 4, 12), ("q", 2, 20))),
    "F4I": ClosedForm((("q", 6, 4), ("q", 2, 8))),
    "G2I": ClosedForm((("q", 3, 4),)),
}
assert set(_EXCEPTIONAL_FORMS) == set(EXCEPTIONAL)


def closed_form(s: SpaceDescriptor) -> ClosedForm:
    """The factored table expression for ``s``, independent of the degree data."""
    fam, ps = s.family, s.params
    if fam == "TypeII":
        return ClosedForm(tuple(("e", 2 * k - 1) for k in sorted(degrees(s.group))))
    if fam in _EXCEPTIONAL_FORMS:
        return _EXCEPTIONAL_FORMS[fam]
    if fam == "Sphere":
        return ClosedForm((("e", ps[0]),))
    if fam in ("CpxGrass", "QuatGrass"):
        p, q = ps
        step = 2 if fam == "CpxGrass" else 4
        if p == 1:
            return ClosedForm((("q", q + 1, step),))
        return ClosedForm((("b", p, q, step),))
    if fam == "RealGrassB":
        k, l = ps
        return ClosedForm((("b", k, l, 4), ("q", 2, 2 * k)))
    if fam == "RealGrassDOdd":
        k, l = ps
        return ClosedForm((("e", 2 * k + 2 * l + 1), ("b", k, l, 4)))
    if fam == "RealGrassDEven":
        k, l = ps
        return ClosedForm((("q", 2, 2 * k), ("q", 2, 2 * l), ("b", k, l, 4)), (("q", 2, 2 * k + 2 * l),))
    n = ps[0]
    if fam == "AI":
        m, odd = divmod(n, 2)
        if odd:  # SU(2m+1)/SO(2m+1)
            return ClosedForm(tuple(("e", 4 * i + 1) for i in range(1, m + 1)))
        return ClosedForm((("q", 2, 2 * m),) + tuple(("e", 4 * i + 1) for i in range(1, m)))
    if fam == "AII":
        return ClosedForm(tuple(("e", 4 * i + 1) for i in range(1, n)))
    if fam == "CnI":
        return ClosedForm(tuple(("q", 2, 2 * i) for i in range(1, n + 1)))
    if fam == "DnIII":
        return ClosedForm(tuple(("q", 2, 2 * i) for i in range(1, n)))
    raise ValueError(f"no closed form for {fam}")
