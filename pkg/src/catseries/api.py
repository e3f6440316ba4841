"""Request/response models and handlers shared by the HTTP service and CLI.

The FastAPI app mounts each ``handle_*`` function on a POST route; the CLI
builds the same request models from flags and calls the handlers in
process.  Keeping one handler layer means the two front ends cannot drift.
"""
from __future__ import annotations

import fnmatch
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from . import analytic, bessel, fibclosed, quadrature, series, verify
from .config import GlobalConfig
from .errors import DomainError
from .polynomials import p_pair_recursive, q_kernel
from .series import WeightSpec

SCHEMA_VERSION = "1"

__all__ = [
    "SCHEMA_VERSION",
    "EvalRequest",
    "EvalResponse",
    "PolyRequest",
    "PolyResponse",
    "SumRequest",
    "SumResponse",
    "FibRequest",
    "FibResponse",
    "IntegrateRequest",
    "IntegrateResponse",
    "MellinRequest",
    "MellinResponse",
    "VerifyRequest",
    "VerifyResponse",
    "handle_eval",
    "handle_poly",
    "handle_sum",
    "handle_fib",
    "handle_integrate",
    "handle_mellin",
    "handle_verify",
]


class EvalRequest(BaseModel):
    what: Literal["g", "f", "gtrig", "sprugnoli", "integrated"]
    m: int = Field(default=0, ge=0, description="power weight (g) or variant (gtrig)")
    z: float


class EvalResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    what: str
    m: int
    z: float
    value: float
    method: str = "closed_form"


def handle_eval(req: EvalRequest, config: GlobalConfig | None = None) -> EvalResponse:
    if req.what == "g":
        value = analytic.g_closed(req.m, req.z)
    elif req.what == "f":
        value = analytic.f_closed(req.z)
    elif req.what == "gtrig":
        if req.m not in (0, 1):
            raise DomainError("gtrig supports variants m=0 and m=1 only")
        value = analytic.g_trig(req.m, req.z)
    elif req.what == "sprugnoli":
        value = analytic.sprugnoli_closed(req.z)
    else:
        value = analytic.integrated_closed(req.z)
    return EvalResponse(what=req.what, m=req.m, z=req.z, value=value)


class PolyRequest(BaseModel):
    m: int = Field(ge=0)
    family: Literal["p1", "p2", "q"] = "p1"


class PolyResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    m: int
    family: str
    variable: str
    degree: int
    coefficients: List[str] = Field(description="exact values as num/den, lowest power first")


def handle_poly(req: PolyRequest, config: GlobalConfig | None = None) -> PolyResponse:
    if req.family == "q":
        poly, variable = q_kernel(req.m), "u"
    else:
        pair = p_pair_recursive(req.m)
        poly, variable = (pair.p1 if req.family == "p1" else pair.p2), "z"
    return PolyResponse(
        m=req.m,
        family=req.family,
        variable=variable,
        degree=poly.degree,
        coefficients=poly.coefficient_strings(),
    )


class SumRequest(BaseModel):
    """A weight-spec document selecting one series and its summation budget."""

    kind: Literal["plain", "power", "f", "fib", "luc", "integrated", "sprugnoli"]
    m: int = Field(default=0, ge=0)
    r: int = 2
    s: int = 0
    lucas_scaled: bool = False
    z: Optional[float] = None
    tol: Optional[float] = Field(default=None, gt=0)
    max_terms: Optional[int] = Field(default=None, ge=16)


class SumResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: str
    value: float
    tail_bound: float
    terms_used: int
    converged: bool


def handle_sum(req: SumRequest, config: GlobalConfig | None = None) -> SumResponse:
    ec = (config or GlobalConfig()).eval_config()
    spec = WeightSpec(
        kind=req.kind, m=req.m, r=req.r, s=req.s, lucas_scaled=req.lucas_scaled, z=req.z
    )
    result = series.sum_weighted(
        spec,
        tol=req.tol if req.tol is not None else ec.target_abs_tol,
        max_terms=req.max_terms if req.max_terms is not None else ec.max_terms,
    )
    return SumResponse(
        kind=req.kind,
        value=result.value,
        tail_bound=result.tail_bound,
        terms_used=result.terms_used,
        converged=result.converged,
    )


class FibRequest(BaseModel):
    theorem: Literal[1, 2, 3]
    kind: Literal["F", "L"]
    s: int = 0
    r: int = 2


class FibResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    theorem: int
    kind: str
    s: int
    r: Optional[int]
    value: float
    expression: str


def handle_fib(req: FibRequest, config: GlobalConfig | None = None) -> FibResponse:
    if req.theorem == 1:
        cv, r = fibclosed.thm1_rhs(req.kind, req.s), None
    elif req.theorem == 2:
        cv, r = fibclosed.thm2_rhs(req.kind, req.s), None
    else:
        if req.r % 2 != 0 or req.r < 0:
            raise DomainError("theorem 3 requires an even r >= 0")
        cv, r = fibclosed.thm3_rhs(req.kind, req.r, req.s), req.r
    return FibResponse(
        theorem=req.theorem, kind=req.kind, s=req.s, r=r, value=cv.value(), expression=str(cv)
    )


class IntegrateRequest(BaseModel):
    what: Literal["g", "f"]
    m: int = Field(default=0, ge=0)
    z: float
    order: Optional[int] = Field(default=None, ge=2, le=quadrature.MAX_ORDER)


class IntegrateResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    what: str
    m: int
    z: float
    value: float
    estimated_error: float
    nodes_used: int


def handle_integrate(req: IntegrateRequest, config: GlobalConfig | None = None) -> IntegrateResponse:
    ec = (config or GlobalConfig()).eval_config()
    order = req.order if req.order is not None else ec.quadrature_nodes
    if req.what == "g":
        result = quadrature.g_integral(req.m, req.z, order)
    else:
        result = quadrature.f_integral(req.z, order)
    return IntegrateResponse(
        what=req.what,
        m=req.m,
        z=req.z,
        value=result.value,
        estimated_error=result.estimated_error,
        nodes_used=result.nodes_used,
    )


class MellinRequest(BaseModel):
    m: int = Field(default=0, ge=0)
    z: float
    cutoff: Optional[float] = Field(default=None, gt=0)
    order: Optional[int] = Field(default=None, ge=2)


class MellinResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    m: int
    z: float
    value: float


def handle_mellin(req: MellinRequest, config: GlobalConfig | None = None) -> MellinResponse:
    cfg = bessel.ImproperIntegralConfig(
        upper_cutoff=req.cutoff,
        order=req.order if req.order is not None else bessel.DEFAULT_CONFIG.order,
    )
    return MellinResponse(m=req.m, z=req.z, value=bessel.g_mellin(req.m, req.z, cfg))


class VerifyRequest(BaseModel):
    filter: Optional[str] = Field(
        default=None, description="tag (s1..s6) or id glob, e.g. 'thm3-*'"
    )
    format: Literal["json", "csv", "markdown"] = "json"
    jobs: int = Field(default=1, ge=1)


class VerifyResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    summary: dict
    rendered: str
    passed: bool


def select_cases(registry, pattern: Optional[str]):
    """Filter by tag membership or id glob; no filter returns everything."""
    if not pattern:
        return list(registry)
    return [
        c for c in registry if pattern in c.tags or fnmatch.fnmatch(c.id, pattern)
    ]


def handle_verify(req: VerifyRequest, config: GlobalConfig | None = None) -> VerifyResponse:
    registry = select_cases(verify.default_registry(), req.filter)
    report = verify.run(
        registry,
        parallelism=req.jobs,
        config={"filter": req.filter or "", "jobs": req.jobs},
    )
    rendered = verify.emit(report, req.format)
    return VerifyResponse(
        summary=report.summary,
        rendered=rendered,
        passed=report.summary["fail"] == 0,
    )
