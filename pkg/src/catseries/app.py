"""FastAPI service wrapping the evaluator package."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import api
from .config import GlobalConfig
from .errors import DomainError, NotConvergedError

app = FastAPI(
    title="catseries",
    description=(
        "Multi-representation evaluator and cross-verifier for "
        "reciprocal-Catalan series"
    ),
    version="0.1.0",
)

_config = GlobalConfig.from_env()


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "error": "domain"})


@app.exception_handler(NotConvergedError)
async def _not_converged(request: Request, exc: NotConvergedError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc), "error": "convergence"})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "schema_version": api.SCHEMA_VERSION}


@app.post("/eval", response_model=api.EvalResponse)
def eval_endpoint(req: api.EvalRequest) -> api.EvalResponse:
    return api.handle_eval(req, _config)


@app.post("/poly", response_model=api.PolyResponse)
def poly_endpoint(req: api.PolyRequest) -> api.PolyResponse:
    return api.handle_poly(req, _config)


@app.post("/sum", response_model=api.SumResponse)
def sum_endpoint(req: api.SumRequest) -> api.SumResponse:
    return api.handle_sum(req, _config)


@app.post("/fib", response_model=api.FibResponse)
def fib_endpoint(req: api.FibRequest) -> api.FibResponse:
    return api.handle_fib(req, _config)


@app.post("/integrate", response_model=api.IntegrateResponse)
def integrate_endpoint(req: api.IntegrateRequest) -> api.IntegrateResponse:
    return api.handle_integrate(req, _config)


@app.post("/mellin", response_model=api.MellinResponse)
def mellin_endpoint(req: api.MellinRequest) -> api.MellinResponse:
    return api.handle_mellin(req, _config)


@app.post("/verify", response_model=api.VerifyResponse)
def verify_endpoint(req: api.VerifyRequest) -> api.VerifyResponse:
    return api.handle_verify(req, _config)
