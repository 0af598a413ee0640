"""Write the five class tables in every format to an output directory.

    python3 scripts/reproduce_tables.py --out tables --max-dim 32
"""

import argparse
from pathlib import Path

from symcat.tables import FORMATS, TABLE_CLASSES, build_table, render

SUFFIX = {"markdown": "md", "csv": "csv", "json": "json", "plain": "txt"}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("tables"))
    ap.add_argument("--max-dim", type=int, default=32)
    ap.add_argument("--format", choices=FORMATS, action="append", help="repeatable; default all")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for cls in TABLE_CLASSES:
        table = build_table(cls, args.max_dim)
        for fmt in args.format or FORMATS:
            path = args.out / f"{cls}.{SUFFIX[fmt]}"
            path.write_text(render(table, fmt))
        print(f"{cls:16s} {len(table.rows):4d} rows  footnotes: {', '.join(table.footnotes()) or '-'}")


if __name__ == "__main__":
    main()
