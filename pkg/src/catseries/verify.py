"""Identity registry and cross-method comparison engine.

Every published identity in scope has a registry entry naming two
independently computed sides, a parameter record, and tolerances.  Running
the registry produces a structured report; the JSON emission is canonical
(sorted keys, pinned float formatting, no volatile timing fields) so two
runs with the same configuration are byte-identical.

Classification:

  PASS / FAIL            |delta| within / outside tolerances
  PAPER-DISCREPANCY      a case flagged ``unproven`` failed: the statement
                         under test is asserted without proof (theorem 2) or
                         with ambiguous typesetting (the twice-divided
                         series), so disagreement indicts the statement,
                         not the build
  SKIPPED                case carried a skip reason and was not evaluated

Tolerance semantics: a case passes when ``abs_delta <= abs_tol`` and
``rel_delta <= rel_tol`` over all its grid points.  Cases with a ``scales``
hook instead require ``|delta_i| <= abs_tol * max(1, scale_i)`` pointwise;
the scale is the series' absolute-convergence magnitude, the honest noise
floor of double-precision route agreement at large arguments.
"""
from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import analytic, bessel, closedform, fibclosed, quadrature, series
from .closedform import ClosedValue
from .exact import fibonacci, lucas, mellin_lemma_check, stirling2
from .jsonio import canonical_json, format_float
from .polynomials import (
    RationalPolynomial,
    p_pair_closed,
    p_pair_recursive,
    q_kernel,
    q_kernel_closed,
)
from .series import WeightSpec

__all__ = [
    "IdentityCase",
    "CaseResult",
    "VerificationReport",
    "default_registry",
    "run",
    "emit",
]

Values = Union[float, Sequence[float]]


@dataclass(frozen=True)
class IdentityCase:
    id: str
    tags: Tuple[str, ...]
    lhs_method: str
    rhs_method: str
    params: Dict[str, Union[str, int, float]]
    abs_tol: float
    rel_tol: float
    lhs: Callable[[], Values]
    rhs: Callable[[], Values]
    unproven: bool = False
    scales: Optional[Callable[[], Sequence[float]]] = None
    skip_reason: Optional[str] = None


@dataclass(frozen=True)
class CaseResult:
    id: str
    tags: Tuple[str, ...]
    lhs_method: str
    rhs_method: str
    params: Dict[str, Union[str, int, float]]
    points: int
    lhs_value: Optional[float]
    rhs_value: Optional[float]
    abs_delta: Optional[float]
    rel_delta: Optional[float]
    abs_tol: float
    rel_tol: float
    scaled: bool
    passed: bool
    classification: str
    error: Optional[str]
    runtime_ms: float


@dataclass(frozen=True)
class VerificationReport:
    cases: Tuple[CaseResult, ...]
    summary: Dict[str, int]
    config: Dict[str, Union[str, int, float]]

    def to_json_dict(self) -> dict:
        """Deterministic document: volatile timing fields are excluded."""
        return {
            "schema_version": "1",
            "config": dict(self.config),
            "summary": dict(self.summary),
            "cases": [
                {
                    "id": c.id,
                    "tags": list(c.tags),
                    "lhs_method": c.lhs_method,
                    "rhs_method": c.rhs_method,
                    "params": dict(c.params),
                    "points": c.points,
                    "lhs_value": c.lhs_value,
                    "rhs_value": c.rhs_value,
                    "abs_delta": c.abs_delta,
                    "rel_delta": c.rel_delta,
                    "abs_tol": c.abs_tol,
                    "rel_tol": c.rel_tol,
                    "scaled": c.scaled,
                    "classification": c.classification,
                    "error": c.error,
                }
                for c in self.cases
            ],
        }


def _as_list(v: Values) -> List[float]:
    if isinstance(v, (int, float)):
        return [float(v)]
    return [float(x) for x in v]


def _evaluate(case: IdentityCase) -> CaseResult:
    start = time.perf_counter()

    def done(**kw) -> CaseResult:
        return CaseResult(
            id=case.id,
            tags=case.tags,
            lhs_method=case.lhs_method,
            rhs_method=case.rhs_method,
            params=case.params,
            abs_tol=case.abs_tol,
            rel_tol=case.rel_tol,
            scaled=case.scales is not None,
            runtime_ms=(time.perf_counter() - start) * 1000.0,
            **kw,
        )

    if case.skip_reason is not None:
        return done(
            points=0, lhs_value=None, rhs_value=None, abs_delta=None, rel_delta=None,
            passed=False, classification="SKIPPED", error=case.skip_reason,
        )
    try:
        lhs = _as_list(case.lhs())
        rhs = _as_list(case.rhs())
        if len(lhs) != len(rhs):
            raise ValueError(f"side lengths differ: {len(lhs)} vs {len(rhs)}")
        if not lhs:
            raise ValueError("case produced no points")
        scales = None
        if case.scales is not None:
            scales = [max(1.0, abs(s)) for s in case.scales()]
            if len(scales) != len(lhs):
                raise ValueError("scales length mismatch")
        worst_i, worst_d, worst_scaled = 0, -1.0, -1.0
        rel_max = 0.0
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            d = abs(a - b)
            mag = max(abs(a), abs(b))
            rel_max = max(rel_max, d / mag if mag > 0 else 0.0)
            ds = d / scales[i] if scales else d
            if ds > worst_scaled:
                worst_i, worst_d, worst_scaled = i, d, ds
        if scales:
            passed = worst_scaled <= case.abs_tol
        else:
            passed = worst_d <= case.abs_tol and rel_max <= case.rel_tol
        classification = "PASS" if passed else ("PAPER-DISCREPANCY" if case.unproven else "FAIL")
        return done(
            points=len(lhs),
            lhs_value=lhs[worst_i],
            rhs_value=rhs[worst_i],
            abs_delta=worst_d,
            rel_delta=rel_max,
            passed=passed,
            classification=classification,
            error=None,
        )
    except Exception as exc:  # isolation: a failing case must not stop the run
        return done(
            points=0, lhs_value=None, rhs_value=None, abs_delta=None, rel_delta=None,
            passed=False, classification="FAIL", error=f"{type(exc).__name__}: {exc}",
        )


def run(
    registry: Sequence[IdentityCase],
    parallelism: int = 1,
    config: Optional[Dict[str, Union[str, int, float]]] = None,
) -> VerificationReport:
    """Evaluate every case; report order always equals registry order."""
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if parallelism == 1:
        results = [_evaluate(c) for c in registry]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_evaluate, registry))
    summary = {
        "total": len(results),
        "pass": sum(r.classification == "PASS" for r in results),
        "fail": sum(r.classification == "FAIL" for r in results),
        "paper_discrepancy": sum(r.classification == "PAPER-DISCREPANCY" for r in results),
        "skipped": sum(r.classification == "SKIPPED" for r in results),
    }
    return VerificationReport(
        cases=tuple(results), summary=summary, config=dict(config or {})
    )


def emit(report: VerificationReport, fmt: str, path: Optional[str] = None) -> str:
    """Render the report as json, csv, or markdown; optionally write it.

    json and csv are deterministic byte-for-byte given an equal report; the
    markdown rendering includes per-case runtimes and is for humans.
    """
    if fmt == "json":
        text = canonical_json(report.to_json_dict())
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "lhs", "rhs", "abs_delta", "rel_delta", "classification"])
        for c in report.cases:
            writer.writerow(
                [
                    c.id,
                    "" if c.lhs_value is None else format_float(c.lhs_value),
                    "" if c.rhs_value is None else format_float(c.rhs_value),
                    "" if c.abs_delta is None else format_float(c.abs_delta),
                    "" if c.rel_delta is None else format_float(c.rel_delta),
                    c.classification,
                ]
            )
        text = buf.getvalue()
    elif fmt == "markdown":
        lines = [
            "| id | tags | points | abs_delta | rel_delta | class | ms |",
            "|---|---|---|---|---|---|---|",
        ]
        for c in report.cases:
            ad = "" if c.abs_delta is None else format_float(c.abs_delta, 3)
            rd = "" if c.rel_delta is None else format_float(c.rel_delta, 3)
            lines.append(
                f"| {c.id} | {','.join(c.tags)} | {c.points} | {ad} | {rd} "
                f"| {c.classification} | {c.runtime_ms:.1f} |"
            )
        s = report.summary
        lines.append("")
        lines.append(
            f"total {s['total']}, pass {s['pass']}, fail {s['fail']}, "
            f"paper-discrepancy {s['paper_discrepancy']}, skipped {s['skipped']}"
        )
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path!r}: {exc}") from exc
    return text


# ---------------------------------------------------------------------------
# registry construction

_SERIES_TOL = 1e-12
_WIDE_GRID = tuple(-0.9 + 1.8 * (k + 0.5) / 20 for k in range(20))


def _cv_value(cv: ClosedValue) -> Callable[[], float]:
    return lambda: cv.value()


def _spec_kind(kind: str) -> str:
    return "fib" if kind == "F" else "luc"


def _sum_weighted_values(specs: List[WeightSpec], tol: float) -> Callable[[], List[float]]:
    return lambda: [series.sum_weighted(sp, tol).value for sp in specs]


def _poly_floats(polys: List[RationalPolynomial]) -> Callable[[], List[float]]:
    return lambda: [float(c) for p in polys for c in p.coefficients]


def default_registry() -> List[IdentityCase]:
    """All identities under verification, grouped by source-section tag."""
    cases: List[IdentityCase] = []
    add = cases.append

    g_specials = closedform.g_special_values()
    f_specials = closedform.f_special_values()
    int_specials = closedform.integrated_special_values()

    # ----- s1: the reciprocal-Catalan generating function -----------------
    for z, tag in ((2, "z2"), (3, "z3")):
        cv = f_specials[z]
        add(
            IdentityCase(
                id=f"f-special-{tag}",
                tags=("s1",),
                lhs_method=f"series.sum_f(z={z}, tol={_SERIES_TOL})",
                rhs_method=f"closed_value[{cv}]",
                params={"z": z},
                abs_tol=1e-10,
                rel_tol=1e-10,
                lhs=lambda z=z: series.sum_f(float(z), _SERIES_TOL).value,
                rhs=_cv_value(cv),
            )
        )
    f_grid = (0.0, 0.5, 1.0, 2.0, 3.0, 3.5)
    add(
        IdentityCase(
            id="f-closed-vs-series",
            tags=("s1",),
            lhs_method="analytic.f_closed",
            rhs_method=f"series.sum_f(tol={_SERIES_TOL})",
            params={"z_grid": "0,0.5,1,2,3,3.5"},
            abs_tol=1e-9,
            rel_tol=1e-9,
            lhs=lambda: [analytic.f_closed(z) for z in f_grid],
            rhs=lambda: [series.sum_f(z, _SERIES_TOL).value for z in f_grid],
        )
    )
    add(
        IdentityCase(
            id="f-integral-vs-closed",
            tags=("s1", "s3"),
            lhs_method="quadrature.f_integral(order=64)",
            rhs_method="analytic.f_closed",
            params={"z_grid": "0.5,1,2,3,3.5", "order": 64},
            abs_tol=1e-9,
            rel_tol=1e-9,
            lhs=lambda: [quadrature.f_integral(z, 64).value for z in f_grid[1:]],
            rhs=lambda: [analytic.f_closed(z) for z in f_grid[1:]],
        )
    )

    # ----- s2: g0/g1, trig forms, golden-weighted sums ---------------------
    sprug_grid = (-0.45, -0.25, 0.25, 0.5, 0.75)
    add(
        IdentityCase(
            id="sprugnoli-closed-vs-series",
            tags=("s2",),
            lhs_method="analytic.sprugnoli_closed",
            rhs_method=f"series.sum_sprugnoli(tol={_SERIES_TOL})",
            params={"z_grid": "-0.45,-0.25,0.25,0.5,0.75"},
            abs_tol=1e-10,
            rel_tol=1e-9,
            lhs=lambda: [analytic.sprugnoli_closed(z) for z in sprug_grid],
            rhs=lambda: [series.sum_sprugnoli(z, _SERIES_TOL).value for z in sprug_grid],
        )
    )
    _special_tag = {
        Fraction(1, 4): "zquarter",
        Fraction(1, 2): "zhalf",
        Fraction(3, 4): "z3quarters",
        Fraction(-1, 4): "alt-zquarter",
        Fraction(-1, 2): "alt-zhalf",
        Fraction(-3, 4): "alt-z3quarters",
    }
    for (m, z), cv in sorted(g_specials.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        tag = "s4" if m >= 2 else "s2"
        add(
            IdentityCase(
                id=f"g{m}-special-{_special_tag[z]}",
                tags=(tag,),
                lhs_method=f"series.sum_g(m={m}, z={z}, tol={_SERIES_TOL})",
                rhs_method=f"closed_value[{cv}]",
                params={"m": m, "z": f"{z}"},
                abs_tol=1e-10,
                rel_tol=1e-9,
                lhs=lambda m=m, z=z: series.sum_g(m, float(z), _SERIES_TOL).value,
                rhs=_cv_value(cv),
            )
        )
    trig_grid = tuple(-1.4 + 2.8 * (k + 0.5) / 25 for k in range(25))
    for variant in (0, 1):
        add(
            IdentityCase(
                id=f"gtrig{variant}-vs-closed",
                tags=("s2",),
                lhs_method=f"analytic.g_trig(variant={variant})",
                rhs_method=f"analytic.g_closed(m={variant}, sin^2 w)",
                params={"variant": variant, "w_grid": "25 points in (-1.4, 1.4)"},
                abs_tol=1e-8,
                rel_tol=1e-11,
                lhs=lambda v=variant: [analytic.g_trig(v, w) for w in trig_grid],
                rhs=lambda v=variant: [
                    analytic.g_closed(v, math.sin(w) ** 2) for w in trig_grid
                ],
            )
        )
    # the two proof-stage identities behind theorem 1 (alpha- and beta-sums)
    sqrt5 = math.sqrt(5.0)
    alpha = (1.0 + sqrt5) / 2.0
    beta = (1.0 - sqrt5) / 2.0
    root = math.sqrt(125.0 * sqrt5)
    add(
        IdentityCase(
            id="thm1-proof-alpha-sum",
            tags=("s2",),
            lhs_method="analytic.g_closed(0, alpha^2/4)",
            rhs_method="(2/sqrt5) alpha + 12 pi sqrt(alpha)/sqrt(125 sqrt5)",
            params={"z": "alpha^2/4"},
            abs_tol=1e-12,
            rel_tol=1e-12,
            lhs=lambda: analytic.g_closed(0, alpha * alpha / 4.0),
            rhs=lambda: 2.0 / sqrt5 * alpha + 12.0 * math.pi * math.sqrt(alpha) / root,
        )
    )
    add(
        IdentityCase(
            id="thm1-proof-beta-sum",
            tags=("s2",),
            lhs_method="analytic.g_closed(0, beta^2/4)",
            rhs_method="-(2/sqrt5) beta + 4 pi / (sqrt(125 sqrt5) sqrt(alpha))",
            params={"z": "beta^2/4"},
            abs_tol=1e-12,
            rel_tol=1e-12,
            lhs=lambda: analytic.g_closed(0, beta * beta / 4.0),
            rhs=lambda: -2.0 / sqrt5 * beta + 4.0 * math.pi / (root * math.sqrt(alpha)),
        )
    )
    s_grid = tuple(range(-5, 6))
    for kind in ("F", "L"):
        add(
            IdentityCase(
                id=f"thm1-{kind}-grid",
                tags=("s2",),
                lhs_method=f"fibclosed.thm1_rhs({kind}, s)",
                rhs_method="series.sum_weighted (Binet split)",
                params={"kind": kind, "s_grid": "-5..5"},
                abs_tol=1e-10,
                rel_tol=1e-9,
                lhs=lambda kind=kind: [fibclosed.thm1_rhs(kind, s).value() for s in s_grid],
                rhs=_sum_weighted_values(
                    [WeightSpec(_spec_kind(kind), m=0, s=s) for s in s_grid], 1e-12
                ),
            )
        )
        add(
            IdentityCase(
                id=f"thm2-{kind}-grid",
                tags=("s2",),
                lhs_method=f"fibclosed.thm2_rhs({kind}, s)",
                rhs_method="series.sum_weighted (Binet split)",
                params={"kind": kind, "s_grid": "-5..5"},
                abs_tol=1e-10,
                rel_tol=1e-9,
                unproven=True,
                lhs=lambda kind=kind: [fibclosed.thm2_rhs(kind, s).value() for s in s_grid],
                rhs=_sum_weighted_values(
                    [WeightSpec(_spec_kind(kind), m=1, s=s) for s in s_grid], 1e-12
                ),
            )
        )
    add(
        IdentityCase(
            id="fib-example-table",
            tags=("s2",),
            lhs_method="fibclosed.example_table (printed forms)",
            rhs_method="series.sum_weighted minus the n=0 term",
            params={"entries": 6},
            abs_tol=1e-10,
            rel_tol=1e-9,
            lhs=lambda: [cv.value() for _, _, _, cv in fibclosed.example_table()],
            rhs=lambda: [
                series.sum_weighted(WeightSpec(_spec_kind(kind), m=0, s=s), 1e-12).value
                - (fibonacci(s) if kind == "F" else lucas(s))
                for _, kind, s, _ in fibclosed.example_table()
            ],
        )
    )
    s3_grid = tuple(range(-3, 4))
    for kind in ("F", "L"):
        for r in (0, 2, 4):
            add(
                IdentityCase(
                    id=f"thm3-{kind}-r{r}-grid",
                    tags=("s2",),
                    lhs_method=f"fibclosed.thm3_rhs({kind}, r={r}, s)",
                    rhs_method="series.sum_weighted (Lucas-scaled Binet split)",
                    params={"kind": kind, "r": r, "s_grid": "-3..3"},
                    abs_tol=1e-8,
                    rel_tol=1e-10,
                    lhs=lambda kind=kind, r=r: [
                        fibclosed.thm3_rhs(kind, r, s).value() for s in s3_grid
                    ],
                    rhs=_sum_weighted_values(
                        [
                            WeightSpec(_spec_kind(kind), m=1, r=r, s=s, lucas_scaled=True)
                            for s in s3_grid
                        ],
                        1e-11,
                    ),
                )
            )
    for r in (0, 2):
        add(
            IdentityCase(
                id=f"thm3-instances-r{r}",
                tags=("s2",),
                lhs_method="fibclosed.thm3_instances (printed forms)",
                rhs_method="series.sum_weighted at s=-2r,-3r",
                params={"r": r},
                abs_tol=1e-8,
                rel_tol=1e-10,
                lhs=lambda r=r: [cv.value() for _, cv in fibclosed.thm3_instances(r)],
                rhs=lambda r=r: [
                    2.0
                    * series.sum_weighted(
                        WeightSpec("fib", m=1, r=r, s=-2 * r, lucas_scaled=True), 1e-11
                    ).value,
                    series.sum_weighted(
                        WeightSpec("luc", m=1, r=r, s=-2 * r, lucas_scaled=True), 1e-11
                    ).value,
                    series.sum_weighted(
                        WeightSpec("fib", m=1, r=r, s=-3 * r, lucas_scaled=True), 1e-11
                    ).value,
                    series.sum_weighted(
                        WeightSpec("luc", m=1, r=r, s=-3 * r, lucas_scaled=True), 1e-11
                    ).value,
                ],
            )
        )
    add(
        IdentityCase(
            id="golden-angle-values",
            tags=("s2",),
            lhs_method="sin/cos at pi/10, 3pi/10",
            rhs_method="golden-ratio expressions",
            params={},
            abs_tol=1e-15,
            rel_tol=1e-14,
            lhs=lambda: [
                math.sin(math.pi / 10.0),
                math.sin(3.0 * math.pi / 10.0),
                math.cos(math.pi / 10.0),
                math.cos(3.0 * math.pi / 10.0),
            ],
            rhs=lambda: [
                -beta / 2.0,
                alpha / 2.0,
                math.sqrt(alpha * sqrt5) / 2.0,
                0.5 * math.sqrt(5.0 / (alpha * sqrt5)),
            ],
        )
    )
    arc_grid = (0.1, 0.3, 0.5, 0.7, 0.9)
    add(
        IdentityCase(
            id="kernel-arcsin-equivalence",
            tags=("s2",),
            lhs_method="arctan(sqrt(z/(1-z)))",
            rhs_method="arcsin(sqrt z)",
            params={"z_grid": "0.1,0.3,0.5,0.7,0.9"},
            abs_tol=1e-13,
            rel_tol=1e-13,
            lhs=lambda: [math.atan(math.sqrt(z / (1.0 - z))) for z in arc_grid],
            rhs=lambda: [math.asin(math.sqrt(z)) for z in arc_grid],
        )
    )

    # ----- s3: finite-interval integrals and rearranged series -------------
    add(
        IdentityCase(
            id="lemma-int-exact",
            tags=("s3",),
            lhs_method="closed form 2^(2n+1)/((2n+1) C(2n,n))",
            rhs_method="binomial expansion 2 sum (-1)^k C(n,k)/(2k+1)",
            params={"n_max": 50},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=lambda: [float(quadrature.lemma_int_exact(n)[0]) for n in range(51)],
            rhs=lambda: [float(quadrature.lemma_int_exact(n)[1]) for n in range(51)],
        )
    )
    add(
        IdentityCase(
            id="lemma-int-quadrature",
            tags=("s3",),
            lhs_method="gauss_legendre(64) on (1-x^2)^n",
            rhs_method="exact closed form",
            params={"n_max": 20, "order": 64},
            abs_tol=1e-12,
            rel_tol=1e-12,
            lhs=lambda: [
                quadrature.integrate(
                    quadrature.gauss_legendre(64), lambda x, n=n: (1.0 - x * x) ** n, -1.0, 1.0
                )
                for n in range(21)
            ],
            rhs=lambda: [float(quadrature.lemma_int_exact(n)[0]) for n in range(21)],
        )
    )
    small_grid = (-0.75, -0.5, -0.25, 0.25, 0.5, 0.75)
    for m in (0, 1):
        add(
            IdentityCase(
                id=f"g{m}-integral-vs-closed",
                tags=("s3",),
                lhs_method=f"quadrature.g_integral(m={m}, order=64)",
                rhs_method=f"analytic.g_closed(m={m})",
                params={"m": m, "z_grid": "-0.75..0.75"},
                abs_tol=1e-9,
                rel_tol=1e-10,
                lhs=lambda m=m: [quadrature.g_integral(m, z, 64).value for z in small_grid],
                rhs=lambda m=m: [analytic.g_closed(m, z) for z in small_grid],
            )
        )
    transf_grid = (-0.75, -0.5, -0.25, 0.25, 0.45)
    for variant in (0, 1):
        add(
            IdentityCase(
                id=f"g{variant}-transformed-vs-closed",
                tags=("s3",),
                lhs_method=f"analytic.g_transformed(variant={variant}, terms=400)",
                rhs_method=f"analytic.g_closed(m={variant})",
                params={"variant": variant, "terms": 400, "z_grid": "z < 1/2"},
                abs_tol=1e-8,
                rel_tol=1e-8,
                lhs=lambda v=variant: [
                    analytic.g_transformed(v, z, 400) for z in transf_grid
                ],
                rhs=lambda v=variant: [analytic.g_closed(v, z) for z in transf_grid],
            )
        )
    add(
        IdentityCase(
            id="sprugnoli-transformed-route",
            tags=("s3",),
            lhs_method="sum (-1)^n/(2n+1) (z/(1-z))^(n+1), 400 terms",
            rhs_method="analytic.sprugnoli_closed",
            params={"terms": 400, "z_grid": "z < 1/2"},
            abs_tol=1e-10,
            rel_tol=1e-10,
            lhs=lambda: [
                math.fsum(
                    (-1.0) ** n / (2 * n + 1) * (z / (1.0 - z)) ** (n + 1)
                    for n in range(400)
                )
                for z in transf_grid
            ],
            rhs=lambda: [analytic.sprugnoli_closed(z) for z in transf_grid],
        )
    )

    # ----- s4: the polynomial structure of g_m -----------------------------
    add(
        IdentityCase(
            id="p-pair-recursive-vs-closed",
            tags=("s4",),
            lhs_method="polynomials.p_pair_recursive, m<=10",
            rhs_method="polynomials.p_pair_closed, m<=10",
            params={"m_max": 10},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=_poly_floats(
                [q for m in range(11) for q in (p_pair_recursive(m).p1, p_pair_recursive(m).p2)]
            ),
            rhs=_poly_floats(
                [q for m in range(11) for q in (p_pair_closed(m).p1, p_pair_closed(m).p2)]
            ),
        )
    )
    printed_p = [
        RationalPolynomial([Fraction(1, 4), Fraction(2, 4)]),
        RationalPolynomial([Fraction(-1, 4), Fraction(4, 4)]),
        RationalPolynomial([Fraction(-1, 8), Fraction(12, 8), Fraction(4, 8)]),
        RationalPolynomial([Fraction(1, 8), Fraction(-2, 8), Fraction(16, 8)]),
    ]
    add(
        IdentityCase(
            id="p-pair-printed-m1-m2",
            tags=("s4",),
            lhs_method="polynomials.p_pair_recursive(1..2)",
            rhs_method="printed polynomials (2z+1)/4, (4z-1)/4, (4z^2+12z-1)/8, (16z^2-2z+1)/8",
            params={},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=_poly_floats(
                [p_pair_recursive(1).p1, p_pair_recursive(1).p2, p_pair_recursive(2).p1, p_pair_recursive(2).p2]
            ),
            rhs=_poly_floats(printed_p),
        )
    )
    add(
        IdentityCase(
            id="q-kernel-recursive-vs-closed",
            tags=("s4",),
            lhs_method="polynomials.q_kernel, m<=10",
            rhs_method="polynomials.q_kernel_closed, m<=10",
            params={"m_max": 10},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=_poly_floats([q_kernel(m) for m in range(11)]),
            rhs=_poly_floats([q_kernel_closed(m) for m in range(11)]),
        )
    )
    m2_grid = tuple(-0.85 + 1.7 * (k + 0.5) / 10 for k in range(10))

    def _m2_display(z: float) -> float:
        t = z / (1.0 - z)
        return (4 * z * z + 12 * z - 1) / (8 * (1 - z) ** 3) + (
            16 * z * z - 2 * z + 1
        ) / (8 * (1 - z) ** 4) * analytic.kernel_A(t)

    add(
        IdentityCase(
            id="gm-structure-m2",
            tags=("s4",),
            lhs_method="analytic.g_closed(2, z)",
            rhs_method="printed m=2 display",
            params={"z_grid": "10 points in (-0.85, 0.85)"},
            abs_tol=1e-9,
            rel_tol=1e-12,
            lhs=lambda: [analytic.g_closed(2, z) for z in m2_grid],
            rhs=lambda: [_m2_display(z) for z in m2_grid],
        )
    )
    wide_m = tuple(range(7))
    add(
        IdentityCase(
            id="gm-closed-vs-series-wide",
            tags=("s4",),
            lhs_method="analytic.g_closed",
            rhs_method=f"series.sum_g(tol={_SERIES_TOL})",
            params={"m_max": 6, "z_grid": "20 points in (-0.9, 0.9)"},
            abs_tol=1e-10,
            rel_tol=1.0,
            lhs=lambda: [analytic.g_closed(m, z) for m in wide_m for z in _WIDE_GRID],
            rhs=lambda: [
                series.sum_g(m, z, _SERIES_TOL).value for m in wide_m for z in _WIDE_GRID
            ],
            scales=lambda: [
                max(abs(analytic.g_closed(m, z)), analytic.g_closed(m, abs(z)))
                for m in wide_m
                for z in _WIDE_GRID
            ],
        )
    )
    add(
        IdentityCase(
            id="gm-integral-vs-closed-wide",
            tags=("s4",),
            lhs_method="quadrature.g_integral(order=64)",
            rhs_method="analytic.g_closed",
            params={"m_max": 6, "z_grid": "20 points in (-0.9, 0.9)"},
            abs_tol=1e-9,
            rel_tol=1.0,
            lhs=lambda: [
                quadrature.g_integral(m, z, 64).value for m in wide_m for z in _WIDE_GRID
            ],
            rhs=lambda: [analytic.g_closed(m, z) for m in wide_m for z in _WIDE_GRID],
            scales=lambda: [
                max(abs(analytic.g_closed(m, z)), analytic.g_closed(m, abs(z)))
                for m in wide_m
                for z in _WIDE_GRID
            ],
        )
    )

    def _corollary_ab(m: int) -> Tuple[Fraction, Fraction]:
        pair = p_pair_recursive(m)
        half = Fraction(1, 2)
        return 2 ** (m + 1) * pair.p1(half), 2**m * pair.p2(half)

    add(
        IdentityCase(
            id="corollary-a-plus-b-pi",
            tags=("s4",),
            lhs_method="exact a + b pi from P1, P2 at z=1/2",
            rhs_method=f"series.sum_g(m, 0.5, tol={_SERIES_TOL})",
            params={"m_max": 5},
            abs_tol=1e-9,
            rel_tol=1e-10,
            lhs=lambda: [
                float(_corollary_ab(m)[0]) + float(_corollary_ab(m)[1]) * math.pi
                for m in range(6)
            ],
            rhs=lambda: [series.sum_g(m, 0.5, _SERIES_TOL).value for m in range(6)],
        )
    )

    # ----- s5: Stirling / Mellin / Bessel ----------------------------------
    add(
        IdentityCase(
            id="stirling-triangle-vs-explicit",
            tags=("s5",),
            lhs_method="exact.stirling2 (triangle recursion)",
            rhs_method="explicit alternating sum",
            params={"n_max": 30},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=lambda: [
                float(stirling2(n, k)) for n in range(31) for k in range(n + 1)
            ],
            rhs=lambda: [
                float(
                    sum((-1) ** s * math.comb(k, s) * (k - s) ** n for s in range(k + 1))
                    // math.factorial(k)
                )
                for n in range(31)
                for k in range(n + 1)
            ],
        )
    )
    add(
        IdentityCase(
            id="mellin-lemma-exact",
            tags=("s5",),
            lhs_method="exact.mellin_lemma_check(m, n)",
            rhs_method="true",
            params={"m_max": 10, "n_max": 20},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=lambda: [
                1.0 if mellin_lemma_check(m, n) else 0.0
                for m in range(11)
                for n in range(21)
            ],
            rhs=lambda: [1.0] * (11 * 21),
        )
    )
    rec_orders = tuple(range(1, 6))
    rec_xs = (0.5, 1.0, 2.0, 5.0, 10.0)
    add(
        IdentityCase(
            id="bessel-recurrence",
            tags=("s5",),
            lhs_method="bessel.bessel_k(v+1, x)",
            rhs_method="bessel.bessel_k(v-1, x) + (2v/x) bessel_k(v, x)",
            params={"v_grid": "1..5", "x_grid": "0.5,1,2,5,10"},
            abs_tol=1.0,
            rel_tol=1e-7,
            lhs=lambda: [bessel.bessel_k(v + 1, x) for v in rec_orders for x in rec_xs],
            rhs=lambda: [
                bessel.bessel_k(v - 1, x) + 2.0 * v / x * bessel.bessel_k(v, x)
                for v in rec_orders
                for x in rec_xs
            ],
        )
    )
    add(
        IdentityCase(
            id="bessel-order-symmetry",
            tags=("s5",),
            lhs_method="bessel.bessel_k(-v, x)",
            rhs_method="bessel.bessel_k(v, x)",
            params={"v_grid": "1..5", "x": 2.0},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=lambda: [bessel.bessel_k(-v, 2.0) for v in rec_orders],
            rhs=lambda: [bessel.bessel_k(v, 2.0) for v in rec_orders],
        )
    )
    mellin_zs = (0.1, 0.25, 0.5, 0.75)
    for m in (0, 1, 2):
        add(
            IdentityCase(
                id=f"g-mellin-m{m}",
                tags=("s5",),
                lhs_method=f"bessel.g_mellin(m={m})",
                rhs_method=f"analytic.g_closed(m={m})",
                params={"m": m, "z_grid": "0.1,0.25,0.5,0.75"},
                abs_tol=1.0,
                rel_tol=1e-5,
                lhs=lambda m=m: [bessel.g_mellin(m, z) for z in mellin_zs],
                rhs=lambda m=m: [analytic.g_closed(m, z) for z in mellin_zs],
            )
        )
    add(
        IdentityCase(
            id="mellin-kernel-m1-sign-change",
            tags=("s5",),
            lhs_method="sign(F(1, 0.5)) and sign(F(1, 4.0))",
            rhs_method="negative then positive",
            params={},
            abs_tol=1e-15,
            rel_tol=1e-15,
            lhs=lambda: [
                1.0 if bessel.mellin_kernel_F(1, 0.5) < 0 else 0.0,
                1.0 if bessel.mellin_kernel_F(1, 4.0) > 0 else 0.0,
            ],
            rhs=lambda: [1.0, 1.0],
        )
    )

    # ----- s6: the twice-divided series ------------------------------------
    cv6 = int_specials[Fraction(1, 2)]
    add(
        IdentityCase(
            id="integrated-special-zhalf",
            tags=("s6",),
            lhs_method=f"series.sum_integrated(0.5, tol={_SERIES_TOL})",
            rhs_method=f"closed_value[{cv6}]",
            params={"z": 0.5},
            abs_tol=1e-10,
            rel_tol=1e-10,
            lhs=lambda: series.sum_integrated(0.5, _SERIES_TOL).value,
            rhs=_cv_value(cv6),
        )
    )
    for z, tag in ((0.25, "quarter"), (-0.25, "negquarter")):
        add(
            IdentityCase(
                id=f"integrated-reading-{tag}",
                tags=("s6",),
                lhs_method="analytic.integrated_closed",
                rhs_method=f"series.sum_integrated(tol={_SERIES_TOL})",
                params={"z": z},
                abs_tol=1e-10,
                rel_tol=1e-9,
                unproven=True,
                lhs=lambda z=z: analytic.integrated_closed(z),
                rhs=lambda z=z: series.sum_integrated(z, _SERIES_TOL).value,
            )
        )
    integ_grid = (-0.9, -0.5, 0.5, 0.9)
    add(
        IdentityCase(
            id="integrated-closed-vs-series",
            tags=("s6",),
            lhs_method="analytic.integrated_closed",
            rhs_method=f"series.sum_integrated(tol={_SERIES_TOL})",
            params={"z_grid": "-0.9,-0.5,0.5,0.9"},
            abs_tol=1e-10,
            rel_tol=1e-9,
            lhs=lambda: [analytic.integrated_closed(z) for z in integ_grid],
            rhs=lambda: [series.sum_integrated(z, _SERIES_TOL).value for z in integ_grid],
        )
    )
    return cases
