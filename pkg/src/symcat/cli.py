"""``symcat`` command line: list, show, table, verify, oracle.

Space ids are case-insensitive: ``A3-III-p2``, ``C4-II-p1``, ``sphere-7``,
``B-grass-k2-l3``, ``D-grass-odd-k1-l2``, ``D-grass-even-k2-l2``, ``A4-I``,
``A5-II``, ``C3-I``, ``D5-III``, ``E6-I`` ... ``G2-I``, and type II groups
``A3``, ``B4``, ``E8``, ``U3``. Aliases ``cp-N`` and ``hp-N`` are accepted.
See SPACES.md for the full grammar.

Exit codes: 0 ok, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .catalog import (
    UnknownSpace,
    catalog_entry,
    classify,
    display_name,
    enumerate_spaces,
    isotropy,
    parse_space,
    space_id,
)
from .curvature import spectrum, theorem1_check, theorem2_check, theorem3_check, trace_check
from .poincare import closed_form, poincare
from .tables import FORMATS, TABLE_CLASSES, build_table, parse_params, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_DIM = {"list": 64, "table": 32, "verify": 128}


class UsageError(Exception):
    pass


def _max_dim(args) -> int:
    if args.max_dim is not None:
        value = args.max_dim
    elif os.environ.get("SYMCAT_MAX_DIM"):
        try:
            value = int(os.environ["SYMCAT_MAX_DIM"])
        except ValueError:
            raise UsageError(f"SYMCAT_MAX_DIM must be an integer, got {os.environ['SYMCAT_MAX_DIM']!r}") from None
    else:
        value = DEFAULT_MAX_DIM[args.command]
    if value < 1:
        raise UsageError(f"--max-dim must be at least 1, got {value}")
    return value


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- list

def cmd_list(args, out) -> int:
    max_dim = _max_dim(args)
    spaces = enumerate_spaces(max_dim, include_nonsemisimple=args.all)
    if args.cls:
        spaces = [s for s in spaces if args.cls in classify(s).classes()]
    if args.format == "json":
        out.write(json.dumps([catalog_entry(s) for s in spaces], indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    rows = [(space_id(s), str(catalog_entry(s)["dim"]), ",".join(classify(s).classes()) or "-", display_name(s))
            for s in spaces]
    if args.format == "csv":
        import csv

        w = csv.writer(out, lineterminator="\n")
        w.writerow(["space", "dim", "classes", "name"])
        w.writerows(rows)
        return EXIT_OK
    if args.format == "markdown":
        out.write("| space | dim | classes | name |\n|---|--:|---|---|\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")
        return EXIT_OK
    widths = [max([len(r[i]) for r in rows] + [0]) for i in range(3)]
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[3] + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- show

def show_report(s) -> dict:
    pr = poincare(s)
    spec = spectrum(s)
    t1 = theorem1_check(s)
    return {
        "space": space_id(s),
        "name": display_name(s),
        "dim": spec.dim_m,
        "classes": classify(s).classes(),
        "isotropy": [{"label": f.label, "dim": f.dim, "kind": f.kind} for f in isotropy(s)],
        "chi_t_factored": closed_form(s).format(),
        "chi_t": pr.chi_t.format(),
        "betti": list(pr.betti),
        "chi": pr.euler,
        "spectrum": [
            {"label": e.label, "value": _frac(e.value), "raw": e.raw_text, "mult": e.mult} for e in spec.entries
        ],
        "zero_mult": spec.zero_multiplicity,
        "checks": {
            "trace_identity": trace_check(s, spec),
            "theorem1": t1.ok,
            "theorem2": theorem2_check(s),
            "theorem3": theorem3_check(s),
        },
    }


def cmd_show(args, out) -> int:
    s = parse_space(args.space)
    rep = show_report(s)
    if args.format == "json":
        out.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    lines = [
        f"{rep['space']}: {rep['name']}",
        f"dim      {rep['dim']}",
        f"classes  {', '.join(rep['classes']) or '-'}",
        "isotropy " + " + ".join(f"{f['label']} ({f['dim']})" for f in rep["isotropy"]),
        f"chi(t)   {rep['chi_t_factored']}",
        f"         = {rep['chi_t']}",
        f"betti    {' '.join(map(str, rep['betti']))}",
        f"chi      {rep['chi']}",
        "spectrum",
    ]
    for e in rep["spectrum"]:
        raw = "" if e["raw"] == e["value"] else f" = {e['raw']}"
        lines.append(f"  lambda_{e['label']} = {e['value']}{raw}  (x{e['mult']})")
    if rep["zero_mult"]:
        lines.append(f"  0  (x{rep['zero_mult']})")
    lines.append("checks   " + ", ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in rep["checks"].items()))
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if all(rep["checks"].values()) else EXIT_FAIL


# ---------------------------------------------------------------- table

def cmd_table(args, out) -> int:
    try:
        params = parse_params(args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(render(build_table(args.cls, _max_dim(args), params), args.format))
    return EXIT_OK


# ---------------------------------------------------------------- verify

def cmd_verify(args, out) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, _max_dim(args), args.tolerance, args.max_dim_p)
    out.write(report.summary() + "\n")
    for f in report.failures[: args.show]:
        out.write(f"  FAIL {f}\n")
    if len(report.failures) > args.show:
        out.write(f"  ... {len(report.failures) - args.show} more\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- oracle

def cmd_oracle(args, out) -> int:
    from .oracle import DEFAULT, NEARLY_KAHLER_SPECTRUM, UnsupportedFamily, compare, nearly_kahler_s3s3

    config = replace(DEFAULT, tolerance=args.tolerance)
    if not args.spaces and not args.s3s3:
        raise UsageError("oracle needs at least one space id or --s3s3")
    docs, ok = [], True
    for text in args.spaces:
        s = parse_space(text)
        try:
            rep = compare(s, config, strict=False)
        except UnsupportedFamily as exc:
            raise UsageError(str(exc)) from None
        ok &= rep.ok
        docs.append(rep.to_json())
    if args.s3s3:
        nk = nearly_kahler_s3s3(config, strict=False)
        good = dict(nk.recognized) == NEARLY_KAHLER_SPECTRUM
        ok &= good
        docs.append({
            "space": "S3xS3-nearly-kahler",
            "recognized": [[_frac(v), m] for v, m in nk.recognized],
            "expected": [[_frac(v), m] for v, m in NEARLY_KAHLER_SPECTRUM.items()],
            "max_value": _frac(nk.max_value),
            "trace": _frac(nk.trace_spectrum),
            "einstein": nk.einstein,
            "max_dev": nk.max_dev,
            "status": "ok" if good else "mismatch",
        })
    if args.format == "json":
        out.write(json.dumps(docs if len(docs) > 1 else docs[0], indent=2, sort_keys=True) + "\n")
    else:
        for d in docs:
            vals = ", ".join(f"{v}x{m}" for v, m in d["recognized"])
            out.write(f"{d['space']}: {d['status']}  {vals}  max_dev {d['max_dev']:.1e}\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symcat", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def max_dim(sp):
        sp.add_argument("--max-dim", type=int, default=None,
                        help="dimension bound (default: $SYMCAT_MAX_DIM or a per-command default)")

    sp = sub.add_parser("list", help="list catalog entries up to a dimension")
    max_dim(sp)
    sp.add_argument("--class", dest="cls", choices=TABLE_CLASSES)
    sp.add_argument("--format", choices=FORMATS + ("md",), default="markdown")
    sp.add_argument("--all", action="store_true", help="include U(n) and SO(2)")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("show", help="full report for one space")
    sp.add_argument("space")
    sp.add_argument("--format", choices=("plain", "json"), default="plain")
    sp.set_defaults(func=cmd_show)

    sp = sub.add_parser("table", help="render one of the five class tables")
    sp.add_argument("cls", metavar="class", choices=TABLE_CLASSES)
    max_dim(sp)
    sp.add_argument("--format", choices=FORMATS + ("md",), default="markdown")
    sp.add_argument("--params", help="restrict parametric rows, e.g. k=2,l=3")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="run invariant suites over the catalog")
    sp.add_argument("suite", choices=("all", "poincare", "curvature", "oracle"), nargs="?", default="all")
    max_dim(sp)
    sp.add_argument("--tolerance", type=float, default=1e-8)
    sp.add_argument("--max-dim-p", type=int, default=None, help="oracle cap on dim p (default 60)")
    sp.add_argument("--show", type=int, default=20, help="failures to print")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="numeric curvature spectrum from matrix Lie algebras")
    sp.add_argument("spaces", nargs="*")
    sp.add_argument("--s3s3", action="store_true", help="nearly Kahler S^3 x S^3 fixture")
    sp.add_argument("--tolerance", type=float, default=1e-8)
    sp.add_argument("--format", choices=("json", "plain"), default="json")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "format", None) == "md":
        args.format = "markdown"
    try:
        return args.func(args, out)
    except UnknownSpace as exc:
        print(f"symcat: unknown space {exc.text!r}", file=sys.stderr)
        if exc.suggestions:
            print("  did you mean: " + ", ".join(exc.suggestions), file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"symcat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
