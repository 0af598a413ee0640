"""Rows of the five class tables and their markdown/csv/json/plain renderings.

Parametric families are instantiated up to a dimension bound; the fixed
exceptional members of a class are always listed. Cells that disagree with
the published tables are flagged with footnotes rather than silently fixed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .catalog import (
    EXCEPTIONAL_DIMS,
    FAMILIES,
    SpaceDescriptor,
    classify,
    display_name,
    enumerate_spaces,
    isotropy,
    space_id,
)
from .curvature import spectrum
from .poincare import closed_form, poincare

__all__ = ["TABLE_CLASSES", "FORMATS", "Eigen", "TableRow", "Table", "ERRATA", "build_table", "render",
           "parse_params"]

TABLE_CLASSES = ("groups", "grassmannians", "simple-isotropy", "hermitian", "wolf")
FORMATS = ("markdown", "csv", "json", "plain")

ERRATA = {
    "a2mI-dim": ("SU(2m+1)/SO(2m+1): the source table gives dim (m-1)(2m+1); "
                 "dim g - dim h = m(2m+3), which agrees with (n-1)(n+2)/2 at n = 2m+1."),
    "a2mI-prod": ("SU(2m+1)/SO(2m+1): the source table runs the product of (1+t^(4i+1)) to i = m-1; "
                  "degree and Betti count require i = 1..m."),
    "cpn-su": ("CP^n in the Grassmannian table: the source cell gives su(n) the value (1/2) n/(n+1); "
               "the Hermitian table and the general formula give (1/2) 1/(n+1), used here."),
    "so-subscript": ("Real Grassmannians: the source formulas index the identity blocks by sp(p), sp(q); "
                     "the isotropy is so(p) + so(q) and that is what is used."),
}


def _exceptional_members(cls: str) -> list[SpaceDescriptor]:
    if cls == "groups":
        return [SpaceDescriptor.type_ii(g) for g in EXCEPTIONAL_DIMS]
    out = []
    for fam, names in FAMILIES.items():
        if fam == "TypeII" or names:
            continue
        s = SpaceDescriptor.of(fam)
        if cls in classify(s).classes():
            out.append(s)
    return out


def parse_params(text: str | None) -> dict[str, int]:
    """``"k=2,l=3"`` -> ``{"k": 2, "l": 3}``."""
    if not text:
        return {}
    out: dict[str, int] = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ValueError(f"bad parameter assignment {part!r}; expected name=value")
        try:
            out[key] = int(val)
        except ValueError:
            raise ValueError(f"parameter {key} must be an integer, got {val!r}") from None
    return out


def _matches(s: SpaceDescriptor, params: dict[str, int]) -> bool:
    names = FAMILIES[s.family]
    if s.family == "TypeII":
        return set(params) <= {"n"} and all(s.group.n == v for v in params.values())
    return all(k in names and s.param(k) == v for k, v in params.items())


@dataclass(frozen=True)
class Eigen:
    label: str
    value: str
    raw: str
    mult: int

    def text(self) -> str:
        val = self.value if self.raw == self.value else f"{self.value} = {self.raw}"
        return f"{self.label}: {val} (x{self.mult})"


@dataclass(frozen=True)
class TableRow:
    space: str
    name: str
    dim: int
    eigenvalues: tuple[Eigen, ...]
    chi_t: str
    coefficients: tuple[int, ...]
    chi: int
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "name": self.name,
            "dim": self.dim,
            "eigenvalues": [e.__dict__ for e in self.eigenvalues],
            "chi_t": self.chi_t,
            "betti": list(self.coefficients),
            "chi": self.chi,
            "notes": list(self.notes),
        }


@dataclass
class Table:
    cls: str
    max_dim: int
    params: dict[str, int] = field(default_factory=dict)
    rows: list[TableRow] = field(default_factory=list)

    def footnotes(self) -> list[str]:
        seen: list[str] = []
        for r in self.rows:
            seen += [n for n in r.notes if n not in seen]
        return seen


def _notes(cls: str, s: SpaceDescriptor) -> tuple[str, ...]:
    notes = []
    if s.family == "AI" and s.params[0] % 2 == 1:
        notes += ["a2mI-dim", "a2mI-prod"]
    if cls == "grassmannians" and s.family == "CpxGrass" and s.params[0] == 1 and s.params[1] >= 2:
        notes.append("cpn-su")
    if cls == "grassmannians" and s.family.startswith("RealGrass"):
        notes.append("so-subscript")
    return tuple(notes)


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def make_row(s: SpaceDescriptor, cls: str = "") -> TableRow:
    spec = spectrum(s)
    eig = [Eigen(e.label, _frac(e.value), e.raw_text if e.raw else _frac(e.value), e.mult) for e in spec.entries]
    if s.family == "TypeII":
        eig = [Eigen(f.label, "0", "0", f.dim) for f in isotropy(s) if f.kind == "center_u1"] + eig
    pr = poincare(s)
    return TableRow(space_id(s), display_name(s), spec.dim_m, tuple(eig), closed_form(s).format(),
                    pr.betti, pr.euler, _notes(cls, s))


def build_table(cls: str, max_dim: int, params: dict[str, int] | None = None) -> Table:
    if cls not in TABLE_CLASSES:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(TABLE_CLASSES)}")
    params = params or {}
    table = Table(cls, max_dim, dict(params))
    fixed = _exceptional_members(cls)
    spaces = [s for s in enumerate_spaces(max_dim, include_nonsemisimple=(cls == "groups"))
              if cls in classify(s).classes() and s not in fixed and (not params or _matches(s, params))]
    if cls == "groups":
        spaces = [s for s in spaces if s.group.series not in EXCEPTIONAL_DIMS]
    table.rows = [make_row(s, cls) for s in spaces + fixed]
    return table


# ---------------------------------------------------------------- renderers

HEADER = ("Type/Space", "dim", "eigenvalues", "chi(t)", "chi")


def _marks(row: TableRow, order: list[str]) -> str:
    return "".join(f"[{order.index(n) + 1}]" for n in row.notes)


def _cells(row: TableRow, order: list[str]) -> tuple[str, ...]:
    return (f"{row.space}: {row.name}{_marks(row, order)}", str(row.dim),
            "; ".join(e.text() for e in row.eigenvalues), row.chi_t, str(row.chi))


def _markdown(t: Table) -> str:
    order = t.footnotes()
    lines = [f"### {t.cls} (dim <= {t.max_dim})", "",
             "| " + " | ".join(HEADER) + " |", "|" + "|".join(["---", "--:", "---", "---", "--:"]) + "|"]
    lines += ["| " + " | ".join(_cells(r, order)) + " |" for r in t.rows]
    if order:
        lines.append("")
        lines += [f"[{i}] {ERRATA[k]}" for i, k in enumerate(order, 1)]
    return "\n".join(lines) + "\n"


def _csv(t: Table) -> str:
    order = t.footnotes()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["space", "name", "dim", "eigenvalues", "chi_t", "chi", "notes"])
    for r in t.rows:
        w.writerow([r.space, r.name, r.dim, "; ".join(e.text() for e in r.eigenvalues), r.chi_t, r.chi,
                    " ".join(str(order.index(n) + 1) for n in r.notes)])
    for i, k in enumerate(order, 1):
        buf.write(f"# [{i}] {ERRATA[k]}\n")
    return buf.getvalue()


def _json(t: Table) -> str:
    doc = {
        "class": t.cls,
        "max_dim": t.max_dim,
        "params": t.params,
        "rows": [r.as_dict() for r in t.rows],
        "footnotes": {k: ERRATA[k] for k in t.footnotes()},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _plain(t: Table) -> str:
    order = t.footnotes()
    body = [HEADER] + [_cells(r, order) for r in t.rows]
    widths = [max(len(row[i]) for row in body) for i in range(len(HEADER))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in body]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines += [f"[{i}] {ERRATA[k]}" for i, k in enumerate(order, 1)]
    return "\n".join(lines) + "\n"


_RENDERERS = {"markdown": _markdown, "csv": _csv, "json": _json, "plain": _plain}


def render(t: Table, fmt: str = "markdown") -> str:
    if fmt not in _RENDERERS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return _RENDERERS[fmt](t)
