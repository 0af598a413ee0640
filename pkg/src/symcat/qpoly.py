"""Dense univariate polynomials with exact rational coefficients.

Carries quantum numbers ``[n]_q = 1 + q + ... + q^(n-1)``, Gaussian
binomials and every Poincare polynomial in the package. All arithmetic is
exact (``fractions.Fraction``); division that leaves a remainder raises
instead of truncating.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "NonExactDivision",
    "QPoly",
    "quantum_number",
    "gaussian_binomial",
    "gaussian_binomial_product",
    "mul",
    "divmod_poly",
    "exact_div",
    "substitute_power",
    "eval_int",
    "is_palindromic",
    "product",
]


class NonExactDivision(ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


def _norm(c):
    # integral values are kept as int: same value, much cheaper arithmetic
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _trim(coeffs: Iterable) -> tuple:
    out = [_norm(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class QPoly:
    """Polynomial ``sum(coeffs[i] * q**i)``; the zero polynomial has no coefficients.

    Coefficients are exact rationals in lowest terms; integral ones are
    stored as ``int``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def one(cls) -> QPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> QPoly:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other) -> QPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> QPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> QPoly:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __floordiv__(self, other) -> QPoly:
        return exact_div(self, _coerce(other))

    def __call__(self, x):
        return eval_int(self, x)

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if self.is_zero():
            return self
        return QPoly([0] * k + list(self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative_integral(self) -> bool:
        return self.is_integral() and all(c >= 0 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> QPoly:
        return cls(Fraction(s) for s in json.loads(text))

    def format(self, var: str = "t", style: str = "plain") -> str:
        """Render highest-degree-last, e.g. ``1 + t^{4} + t^{5} + t^{9}``."""
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else (f"{var}^{{{i}}}" if style == "latex" else f"{var}^{i}")
                body = power if mag == 1 else f"{mag}{'' if style == 'latex' else '*'}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format("q")

    def __repr__(self) -> str:
        return f"QPoly({[str(c) for c in self.coeffs]})"


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    return QPoly((x,))


def quantum_number(n: int, step: int = 1) -> QPoly:
    """``[n]_{q^step} = 1 + q^step + ... + q^(step*(n-1))``."""
    if n < 1 or step < 1:
        raise ValueError(f"quantum_number needs n >= 1 and step >= 1, got n={n}, step={step}")
    coeffs = [0] * (step * (n - 1) + 1)
    for i in range(n):
        coeffs[step * i] = 1
    return QPoly(coeffs)


@lru_cache(maxsize=None)
def _gauss(k: int, l: int) -> QPoly:
    # binom(k+l, k) = q^k binom(k+l-1, k) + binom(k+l-1, k-1)
    if k == 0 or l == 0:
        return QPoly.one()
    return _gauss(k, l - 1).shift(k) + _gauss(k - 1, l)


def gaussian_binomial(k: int, l: int, step: int = 1) -> QPoly:
    """Gaussian binomial ``binom(k+l, k)`` in ``q^step``, built by the q-Pascal recurrence."""
    if k < 0 or l < 0:
        raise ValueError("gaussian_binomial needs k, l >= 0")
    if step < 1:
        raise ValueError("step must be >= 1")
    return substitute_power(_gauss(k, l), step)


def gaussian_binomial_product(k: int, l: int, step: int = 1) -> QPoly:
    """Same polynomial as :func:`gaussian_binomial`, via ``[k+l]...[l+1] / [k]...[1]``."""
    num, den = QPoly.one(), QPoly.one()
    for i in range(1, k + 1):
        num = num * quantum_number(l + i, step)
        den = den * quantum_number(i, step)
    return exact_div(num, den)


def mul(a: QPoly, b: QPoly) -> QPoly:
    if a.is_zero() or b.is_zero():
        return QPoly()
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    acs = a.coeffs
    n = len(acs)
    # loop over the (usually sparse) shorter factor, slice-add the longer one
    for j, y in enumerate(b.coeffs):
        if y == 0:
            continue
        if y == 1:
            out[j:j + n] = [u + x for u, x in zip(out[j:j + n], acs)]
        else:
            out[j:j + n] = [u + x * y for u, x in zip(out[j:j + n], acs)]
    return QPoly(out)


def divmod_poly(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Classical long division, ``a = b*quot + rem`` with ``deg rem < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    if len(rem) <= db:
        return QPoly(), a
    support = [(j, y) for j, y in enumerate(b.coeffs) if y != 0]
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        top = rem[i + db]
        if top == 0:
            continue
        c = top * lead if lead in (1, -1) else _norm(Fraction(top) / lead)
        quot[i] = c
        for j, y in support:
            rem[i + j] -= c * y
    return QPoly(quot), QPoly(rem[:db])


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    quot, rem = divmod_poly(a, b)
    if not rem.is_zero():
        raise NonExactDivision(f"({a}) / ({b}) leaves remainder {rem}")
    return quot


def substitute_power(a: QPoly, m: int) -> QPoly:
    """``p(q) -> p(q^m)``."""
    if m < 1:
        raise ValueError("substitute_power needs m >= 1")
    if m == 1 or a.is_zero():
        return a
    out = [0] * (m * a.degree + 1)
    for i, c in enumerate(a.coeffs):
        out[m * i] = c
    return QPoly(out)


def eval_int(a: QPoly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def is_palindromic(a: QPoly) -> bool:
    c = a.coeffs
    return c == c[::-1]


def product(polys: Sequence[QPoly] | Iterable[QPoly]) -> QPoly:
    out = QPoly.one()
    for p in polys:
        out = out * p
    return out
