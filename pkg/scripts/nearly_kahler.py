"""The nearly Kahler S^3 x S^3 curvature operator: spectrum, trace, Einstein constant.

A non-symmetric contrast case: the largest eigenvalue 7/24 sits below the
Einstein constant 5/12, and a negative eigenvalue appears.
"""

from symcat.oracle import NEARLY_KAHLER_SPECTRUM, nearly_kahler_s3s3


def main() -> int:
    nk = nearly_kahler_s3s3(strict=False)
    for value, mult in nk.recognized:
        print(f"{str(value):>6s}  x{mult}")
    print(f"trace   spectrum {nk.trace_spectrum}  matrix {nk.trace_matrix:.12f}")
    print(f"einstein {nk.einstein:.12f}  max eigenvalue {nk.max_value}")
    print(f"symmetry residual {nk.symmetric_residual:.1e}  max_dev {nk.max_dev:.1e}")
    ok = dict(nk.recognized) == NEARLY_KAHLER_SPECTRUM
    print("ok" if ok else "MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
