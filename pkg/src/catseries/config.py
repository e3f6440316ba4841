"""Shared evaluation settings, overridable by environment variables.

Precedence is flag > environment > default; the CLI applies flags, this
module applies the ``CSL_``-prefixed environment.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

__all__ = ["EvalConfig", "GlobalConfig"]


@dataclass(frozen=True)
class EvalConfig:
    """Numeric targets handed to the evaluation routines."""

    target_abs_tol: float = 1e-10
    target_rel_tol: float = 1e-9
    max_terms: int = 200_000
    quadrature_nodes: int = 64

    def __post_init__(self):
        if self.target_abs_tol <= 0 or self.target_rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be >= 16")
        if self.quadrature_nodes <= 0:
            raise ValueError("quadrature_nodes must be positive")


@dataclass(frozen=True)
class GlobalConfig:
    """CLI/service-level configuration."""

    abs_tol: float = 1e-10
    max_terms: int = 200_000
    quad_order: int = 64
    output_format: str = "text"

    @staticmethod
    def from_env(env: dict | None = None) -> "GlobalConfig":
        env = os.environ if env is None else env
        return GlobalConfig(
            abs_tol=float(env.get("CSL_ABS_TOL", 1e-10)),
            max_terms=int(env.get("CSL_MAX_TERMS", 200_000)),
            quad_order=int(env.get("CSL_QUAD_ORDER", 64)),
            output_format=env.get("CSL_OUTPUT_FORMAT", "text"),
        )

    def eval_config(self) -> EvalConfig:
        return EvalConfig(
            target_abs_tol=self.abs_tol,
            max_terms=self.max_terms,
            quadrature_nodes=self.quad_order,
        )
