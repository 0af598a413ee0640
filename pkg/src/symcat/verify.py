"""Invariant suites over the enumerated catalog, shared by the CLI and the tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .catalog import (
    SpaceDescriptor,
    classify,
    degree_data,
    dimension,
    enumerate_spaces,
    g_dim,
    is_semisimple,
    isotropy,
    space_id,
)
from .curvature import (
    HALF,
    formula_values,
    spectrum,
    theorem1_check,
    theorem2_check,
    theorem3_check,
    trace_check,
)
from .poincare import closed_form, euler_both_ways, poincare

__all__ = ["Failure", "SuiteReport", "SUITES", "run_suite", "poincare_checks", "curvature_checks", "oracle_checks"]


@dataclass(frozen=True)
class Failure:
    space: str
    check: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.space}: {self.check}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class SuiteReport:
    suite: str
    spaces: int = 0
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: SuiteReport) -> None:
        self.spaces = max(self.spaces, other.spaces)
        self.checks += other.checks
        self.failures += other.failures
        self.skipped += other.skipped

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{self.suite}: {status} {self.checks} checks over {self.spaces} spaces, "
                f"{len(self.failures)} failures, {len(self.skipped)} skipped ({self.seconds:.2f}s)")


Check = tuple[str, Callable[[], object]]


def _run(report: SuiteReport, s: SpaceDescriptor, checks: Iterable[Check]) -> None:
    """Each check returns True/None for success, False or a message for failure."""
    sid = space_id(s)
    for name, fn in checks:
        report.checks += 1
        try:
            out = fn()
        except Exception as exc:  # a raised error is a failed check, not a crashed suite
            report.failures.append(Failure(sid, name, f"{type(exc).__name__}: {exc}"))
            continue
        if out is False or isinstance(out, str):
            report.failures.append(Failure(sid, name, out if isinstance(out, str) else ""))


def poincare_checks(s: SpaceDescriptor) -> list[Check]:
    pr = poincare(s)
    d = degree_data(s)
    dim = dimension(s)

    def euler():
        chi, wang = euler_both_ways(s)
        if d.d_g0:
            return chi == 0 and wang is None or f"unequal rank but chi={chi}"
        return chi == wang or f"chi(-1)={chi} but Wang ratio={wang}"

    def closed():
        cf = closed_form(s).poly()
        return cf == pr.chi_t or f"closed form {cf} != Takeuchi {pr.chi_t}"

    checks: list[Check] = [
        ("nonnegative integer coefficients", lambda: pr.chi_t.is_nonnegative_integral()),
        ("degree = dim", lambda: pr.chi_t.degree == dim or f"deg {pr.chi_t.degree} vs dim {dim}"),
        ("b0 = 1", lambda: pr.b(0) == 1),
        ("palindromic", lambda: pr.palindromic),
        ("Euler characteristic both ways", euler),
        ("equal rank iff chi != 0", lambda: (not d.d_g0) == (pr.euler != 0)),
        ("closed form = Takeuchi", closed),
        ("dim h + dim M = dim g", lambda: isotropy(s).dim + dim == g_dim(s)),
    ]
    if is_semisimple(s):
        checks.append(("b2 = 1 iff Hermitian", lambda: (pr.b(2) == 1) == classify(s).is_hermitian
                       and pr.b(2) in (0, 1)))
        group_like = s.family == "TypeII" or (s.family == "Sphere" and s.params == (3,))
        checks.append(("b3 != 0 iff group manifold", lambda: (pr.b(3) != 0) == group_like))
    return checks


def curvature_checks(s: SpaceDescriptor) -> list[Check]:
    spec = spectrum(s)
    iso = isotropy(s)

    def multiplicities():
        if spec.dim_h != iso.dim:
            return f"sum of multiplicities {spec.dim_h} != dim h {iso.dim}"
        return spec.zero_multiplicity == comb(dimension(s), 2) - iso.dim and spec.zero_multiplicity >= 0

    def overlaps():
        primary = {e.label: e.value for e in spec.entries}
        for name, vals in formula_values(s).items():
            for label, v in vals.items():
                if primary.get(label) != v:
                    return f"{name} formula gives {label}={v}, primary {primary.get(label)}"
        return True

    def t1():
        r = theorem1_check(s)
        return r.ok or str(r)

    return [
        ("multiplicities", multiplicities),
        ("eigenvalues in [0, 1/2]", lambda: all(0 <= e.value <= HALF for e in spec.entries)),
        ("trace identity", lambda: trace_check(s, spec)),
        ("theorem 1", t1),
        ("theorem 2", lambda: theorem2_check(s)),
        ("theorem 3", lambda: theorem3_check(s)),
        ("class formula overlaps", overlaps),
    ]


def oracle_checks(s: SpaceDescriptor, config=None) -> list[Check]:
    from .oracle import DEFAULT, compare

    config = config or DEFAULT

    def run():
        rep = compare(s, config, strict=False)
        if rep.ok:
            return True
        got = dict(rep.numeric.recognized)
        return f"expected {_fmt(rep.closed_form)}, got {_fmt(got)}; max_dev {rep.numeric.max_dev:.1e}"

    return [("oracle spectrum", run)]


def _fmt(d: dict) -> str:
    return ", ".join(f"{v}x{m}" for v, m in d.items())


def run_suite(suite: str, max_dim: int, tolerance: float = 1e-8, max_dim_p: int | None = None) -> SuiteReport:
    """Run ``poincare``, ``curvature``, ``oracle`` or ``all`` over ``enumerate_spaces(max_dim)``."""
    if suite == "all":
        total = SuiteReport("all")
        t0 = time.perf_counter()
        for name in ("poincare", "curvature", "oracle"):
            total.merge(run_suite(name, max_dim, tolerance, max_dim_p))
        total.seconds = time.perf_counter() - t0
        return total
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    t0 = time.perf_counter()
    report = SuiteReport(suite)
    spaces = enumerate_spaces(max_dim)
    report.spaces = len(spaces)
    if suite == "oracle":
        _oracle_suite(report, spaces, tolerance, max_dim_p)
    else:
        builder = SUITES[suite]
        for s in spaces:
            try:
                checks = builder(s)
            except Exception as exc:
                report.failures.append(Failure(space_id(s), "setup", f"{type(exc).__name__}: {exc}"))
                continue
            _run(report, s, checks)
    report.seconds = time.perf_counter() - t0
    return report


def _oracle_suite(report: SuiteReport, spaces, tolerance: float, max_dim_p: int | None) -> None:
    from dataclasses import replace

    from .oracle import DEFAULT, NEARLY_KAHLER_SPECTRUM, build_algebra, killing_fit, nearly_kahler_s3s3
    from .oracle import paper_killing_constant, REALIZATION_FACTOR, supports

    config = replace(DEFAULT, tolerance=tolerance, max_dim_p=max_dim_p or DEFAULT.max_dim_p)
    for s in spaces:
        if not supports(s, config):
            report.skipped.append(space_id(s))
            continue
        _run(report, s, oracle_checks(s, config))

    kinds = [("su", n) for n in range(2, 9)] + [("sp", n) for n in range(1, 6)] + [("so", n) for n in range(3, 13)]
    for kind, n in kinds:
        def fit(kind=kind, n=n):
            f = killing_fit(build_algebra(kind, n, config), tol=tolerance)
            want = paper_killing_constant(kind, n)
            got = f.constant * REALIZATION_FACTOR[kind]
            return abs(got - want) < tolerance * max(1, want) or f"constant {got} != {want}"
        report.checks += 1
        try:
            out = fit()
        except Exception as exc:
            out = f"{type(exc).__name__}: {exc}"
        if out is not True:
            report.failures.append(Failure(f"{kind}({n})", "Killing constant", str(out)))

    report.checks += 1
    try:
        nk = nearly_kahler_s3s3(config, strict=False)
        if dict(nk.recognized) != NEARLY_KAHLER_SPECTRUM:
            report.failures.append(Failure("S3xS3", "nearly Kahler spectrum", str(nk.recognized)))
    except Exception as exc:
        report.failures.append(Failure("S3xS3", "nearly Kahler spectrum", repr(exc)))


SUITES: dict[str, Callable[[SpaceDescriptor], list[Check]]] = {
    "poincare": poincare_checks,
    "curvature": curvature_checks,
    "oracle": oracle_checks,
}
