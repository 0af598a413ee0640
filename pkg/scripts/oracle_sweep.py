"""Numeric cross-check of every supported space up to a bound on dim p.

Prints one line per space with the route used, the largest float deviation
from the recognized rationals, and the wall time.

    python3 scripts/oracle_sweep.py --max-dim-p 40
"""

import argparse
import time
from dataclasses import replace

from symcat.catalog import dimension, enumerate_spaces, space_id
from symcat.oracle import DEFAULT, compare, supports


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-dim-p", type=int, default=DEFAULT.max_dim_p)
    ap.add_argument("--tolerance", type=float, default=DEFAULT.tolerance)
    args = ap.parse_args()
    config = replace(DEFAULT, max_dim_p=args.max_dim_p, tolerance=args.tolerance)

    bad = skipped = 0
    total = time.perf_counter()
    for s in enumerate_spaces(args.max_dim_p):
        if not supports(s, config):
            skipped += 1
            continue
        t0 = time.perf_counter()
        rep = compare(s, config, strict=False)
        bad += not rep.ok
        print(f"{space_id(s):22s} dim {dimension(s):3d}  {rep.numeric.route:5s}  "
              f"max_dev {rep.numeric.max_dev:.1e}  {'ok' if rep.ok else 'MISMATCH'}  {time.perf_counter() - t0:.2f} s")
    print(f"{bad} mismatches, {skipped} unsupported, {time.perf_counter() - total:.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
