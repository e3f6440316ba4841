"""Gauss-Legendre quadrature and the finite-interval integral representations.

The integral routes evaluated here are

    g_m(z) = integral_{-1}^{1} Q_m(z (1-x^2)) / (1 - z (1-x^2))^(m+2) dx
    f(z)   = 1 + 2 z integral_0^1 (1-x) / (1 - z x (1-x))^3 dx

plus the exact lemma  integral_{-1}^{1} (1 - x^2)^n dx
                        = 2^(2n+1) / ((2n+1) binomial(2n, n)),
which is checked two ways in closed rational arithmetic.

Integrands are smooth on compact intervals for the admissible arguments, so
fixed rules with order doubling give spectral convergence; the doubling
difference serves as the (conservative) error estimate.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple

import numpy as np

from .errors import DomainError, NotConvergedError
from .exact import binomial
from .polynomials import q_kernel

__all__ = [
    "QuadratureRule",
    "IntegralResult",
    "gauss_legendre",
    "integrate",
    "lemma_int_exact",
    "g_integral",
    "f_integral",
]

MAX_ORDER = 512


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on [-1, 1]; exact for degree 2*order - 1."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


_rule_cache: Dict[int, QuadratureRule] = {}
_rule_lock = threading.Lock()


def gauss_legendre(order: int) -> QuadratureRule:
    """Build the order-point Gauss-Legendre rule by Newton iteration.

    Nodes are the roots of the Legendre polynomial P_order, found from the
    Chebyshev initial guess and polished with the three-term recurrence;
    weights are 2 / ((1 - x^2) P_order'(x)^2).
    """
    if not 2 <= order <= MAX_ORDER:
        raise ValueError(f"order must be in [2, {MAX_ORDER}], got {order}")
    rule = _rule_cache.get(order)
    if rule is not None:
        return rule
    n = order
    k = np.arange(n)
    x = np.cos(math.pi * (k + 0.75) / (n + 0.5))
    for _ in range(100):
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        for j in range(n):
            p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for j in range(n):
        p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # enforce exact symmetry about 0
    idx = np.argsort(x)
    x, w = x[idx], w[idx]
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    rule = QuadratureRule(nodes=x, weights=w, order=order)
    with _rule_lock:
        _rule_cache[order] = rule
    return rule


def integrate(rule: QuadratureRule, f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> float:
    """Apply ``rule`` to a vectorized integrand on [a, b]."""
    half = 0.5 * (b - a)
    x = half * rule.nodes + 0.5 * (a + b)
    return half * float(np.dot(rule.weights, f(x)))


@dataclass(frozen=True)
class IntegralResult:
    value: float
    estimated_error: float
    nodes_used: int


def lemma_int_exact(n: int) -> Tuple[Fraction, Fraction]:
    """Both exact evaluations of integral_{-1}^{1} (1 - x^2)^n dx.

    Returns (closed form, binomial expansion):

      closed   = 2^(2n+1) / ((2n+1) binomial(2n, n))
      expanded = 2 sum_{k=0}^{n} binomial(n, k) (-1)^k / (2k+1)

    The two must be equal; the verification suite asserts it for n <= 50.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    closed = Fraction(2 ** (2 * n + 1), (2 * n + 1) * binomial(2 * n, n))
    expanded = 2 * sum(
        Fraction((-1) ** k * binomial(n, k), 2 * k + 1) for k in range(n + 1)
    )
    return closed, expanded


def _refine(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    order: int,
    target: float,
) -> IntegralResult:
    """Integrate with order doubling until the doubling difference meets
    ``target`` (relative to the value scale) or MAX_ORDER is exceeded."""
    value = integrate(gauss_legendre(order), f, a, b)
    nodes = order
    while True:
        next_order = 2 * order
        if next_order > MAX_ORDER:
            raise NotConvergedError(
                f"order-doubling stalled at order {order} with estimate above target"
            )
        refined = integrate(gauss_legendre(next_order), f, a, b)
        nodes += next_order
        err = abs(refined - value)
        value, order = refined, next_order
        if err <= target * max(1.0, abs(refined)):
            return IntegralResult(value=value, estimated_error=err, nodes_used=nodes)


_REFINE_TARGET = 1e-11


def g_integral(m: int, z: float, order: int = 64) -> IntegralResult:
    """Integral route for g_m(z): kernel Q_m over (1 - z(1-x^2))^(m+2) on [-1, 1]."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if not -1.0 < z < 1.0:
        raise DomainError(f"g_integral requires |z| < 1, got z={z}")
    q = q_kernel(m)
    coeffs = [float(c) for c in q.coefficients]

    def integrand(x: np.ndarray) -> np.ndarray:
        u = z * (1.0 - x * x)
        acc = np.zeros_like(u)
        for c in reversed(coeffs):
            acc = acc * u + c
        return acc / (1.0 - u) ** (m + 2)

    return _refine(integrand, -1.0, 1.0, order, _REFINE_TARGET)


def f_integral(z: float, order: int = 64) -> IntegralResult:
    """Integral route for f(z) = 1 + 2z * integral_0^1 (1-x)/(1 - z x(1-x))^3 dx.

    The denominator stays positive for z < 4 because x(1-x) <= 1/4.
    """
    if not 0.0 <= z < 4.0:
        raise DomainError(f"f_integral requires 0 <= z < 4, got z={z}")
    if z == 0.0:
        return IntegralResult(value=1.0, estimated_error=0.0, nodes_used=0)

    def integrand(x: np.ndarray) -> np.ndarray:
        return (1.0 - x) / (1.0 - z * x * (1.0 - x)) ** 3

    inner = _refine(integrand, 0.0, 1.0, order, _REFINE_TARGET)
    return IntegralResult(
        value=1.0 + 2.0 * z * inner.value,
        estimated_error=2.0 * abs(z) * inner.estimated_error,
        nodes_used=inner.nodes_used,
    )
