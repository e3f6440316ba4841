"""Direct summation oracles with certified geometric tail bounds.

Every closed form, quadrature, and Bessel-integral result in this package is
cross-checked against the truncated series computed here.  Truncation error
is certified, not estimated: each series family exposes a bound function
``bound(n) >= sup_{k >= n} |t_{k+1} / t_k|`` derived from its exact term
ratio.  Once ``bound(N) <= q`` for the threshold ``q = (1 + rho)/2 < 1``
(rho the limiting ratio), the tail after term N is at most
``|t_N| * q / (1 - q)``.

The certificate covers truncation only; double-precision rounding of the
terms themselves is separate and is pinned by the exact-partial cross-checks
(:func:`exact_partial`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Tuple, Union

from .errors import DomainError
from .exact import catalan, fibonacci, lucas
from .closedform import _SQRT5

__all__ = [
    "SeriesResult",
    "WeightSpec",
    "sum_g",
    "sum_f",
    "sum_integrated",
    "sum_sprugnoli",
    "sum_weighted",
    "partial_value",
    "exact_partial",
]

DEFAULT_MAX_TERMS = 200_000

_ALPHA = (1.0 + _SQRT5) / 2.0
_BETA = (1.0 - _SQRT5) / 2.0


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a truncated summation.

    ``tail_bound`` is a certified bound on the truncation error;
    ``converged`` is True iff the bound met the requested tolerance within
    ``max_terms``.
    """

    value: float
    tail_bound: float
    terms_used: int
    converged: bool


@dataclass(frozen=True)
class WeightSpec:
    """Which member of the series family to sum.

    kind:
      - "plain"       sum 4^n z^n / ((2n+1) C_n)                    (= power, m=0)
      - "power"       sum 4^n n^m z^n / ((2n+1) C_n)
      - "f"           sum z^n / C_n
      - "integrated"  sum 4^n z^n / ((2n+1)(n+1)(n+2) C_n)
      - "sprugnoli"   sum 4^n z^(n+1) / ((2n+1) binomial(2n,n))
      - "fib" / "luc" golden-weighted sums; with lucas_scaled=False the
        weight is n^m F_{2n+s} (or L) over (2n+1) C_n, with
        lucas_scaled=True it is 4^n n^m F_{rn+s} / L_r^n over (2n+1) C_n
        (r must be even so the split arguments stay inside the unit disk).
    """

    kind: str
    m: int = 0
    r: int = 2
    s: int = 0
    lucas_scaled: bool = False
    z: Union[float, Fraction, None] = None


# ---------------------------------------------------------------------------
# summation engine


def _run(
    terms: Iterator[float],
    bound: Callable[[int], float],
    q: float,
    tol: Optional[float],
    max_terms: int,
    n_last: Optional[int] = None,
) -> SeriesResult:
    """Sum ``terms`` until the certified tail is <= tol (or n reaches n_last)."""
    parts = []
    tail = math.inf
    converged = False
    n = -1
    for n, t in enumerate(terms):
        parts.append(t)
        if n_last is not None:
            if n == n_last:
                converged = True
                tail = 0.0
                break
            continue
        b = bound(n)
        if b <= q:
            tail = abs(t) * q / (1.0 - q)
            if tail <= tol:
                converged = True
                break
        if n + 1 >= max_terms:
            break
    return SeriesResult(math.fsum(parts), tail, n + 1, converged)


def _g_family(m: int, z: float) -> Tuple[Iterator[float], Callable[[int], float], float]:
    az = abs(z)

    def terms() -> Iterator[float]:
        u = 1.0  # u_n = 4^n z^n / ((2n+1) C_n)
        n = 0
        while True:
            yield float(n**m) * u if m else u
            u *= z * (2.0 * n + 4.0) / (2.0 * n + 3.0)
            n += 1

    def bound(n: int) -> float:
        # exact ratio |z| ((n+1)/n)^m (2n+4)/(2n+3), decreasing in n
        if n == 0:
            return math.inf if m else az * 4.0 / 3.0
        return az * ((n + 1.0) / n) ** m * (2.0 * n + 4.0) / (2.0 * n + 3.0)

    return terms(), bound, (1.0 + az) / 2.0


def _f_family(z: float) -> Tuple[Iterator[float], Callable[[int], float], float]:
    az = abs(z)

    def terms() -> Iterator[float]:
        u = 1.0  # u_n = z^n / C_n
        n = 0
        while True:
            yield u
            u *= z * (n + 2.0) / (2.0 * (2.0 * n + 1.0))
            n += 1

    def bound(n: int) -> float:
        # |z| (n+2) / (2(2n+1)), decreasing in n, limit |z|/4
        return az * (n + 2.0) / (2.0 * (2.0 * n + 1.0))

    return terms(), bound, (1.0 + az / 4.0) / 2.0


def _integrated_family(z: float):
    az = abs(z)

    def terms() -> Iterator[float]:
        u = 1.0
        n = 0
        while True:
            yield u / ((n + 1.0) * (n + 2.0))
            u *= z * (2.0 * n + 4.0) / (2.0 * n + 3.0)
            n += 1

    # ratio = z * 2(n+1)(n+2) / ((2n+3)(n+3)) < z for every n
    return terms(), (lambda n: az), (1.0 + az) / 2.0


def _sprugnoli_family(z: float):
    az = abs(z)

    def terms() -> Iterator[float]:
        u = 1.0
        n = 0
        while True:
            yield z * u / (n + 1.0)
            u *= z * (2.0 * n + 4.0) / (2.0 * n + 3.0)
            n += 1

    # ratio = z * 2(n+1) / (2n+3) < z for every n
    return terms(), (lambda n: az), (1.0 + az) / 2.0


def sum_g(
    m: int,
    z: float,
    tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
    n_last: Optional[int] = None,
) -> SeriesResult:
    """Sum 4^n n^m z^n / ((2n+1) C_n) for |z| < 1 to the requested tolerance."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if not -1.0 < z < 1.0:
        raise DomainError(f"sum_g requires |z| < 1, got z={z}")
    terms, bound, q = _g_family(m, z)
    return _run(terms, bound, q, tol, max_terms, n_last)


def sum_f(
    z: float,
    tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
    n_last: Optional[int] = None,
) -> SeriesResult:
    """Sum z^n / C_n for |z| < 4."""
    if not -4.0 < z < 4.0:
        raise DomainError(f"sum_f requires |z| < 4, got z={z}")
    terms, bound, q = _f_family(z)
    return _run(terms, bound, q, tol, max_terms, n_last)


def sum_integrated(
    z: float,
    tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
    n_last: Optional[int] = None,
) -> SeriesResult:
    """Sum 4^n z^n / ((2n+1)(n+1)(n+2) C_n) for |z| < 1."""
    if not -1.0 < z < 1.0:
        raise DomainError(f"sum_integrated requires |z| < 1, got z={z}")
    terms, bound, q = _integrated_family(z)
    return _run(terms, bound, q, tol, max_terms, n_last)


def sum_sprugnoli(
    z: float,
    tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
    n_last: Optional[int] = None,
) -> SeriesResult:
    """Sum 4^n z^(n+1) / ((2n+1) binomial(2n,n)) for |z| < 1."""
    if not -1.0 < z < 1.0:
        raise DomainError(f"sum_sprugnoli requires |z| < 1, got z={z}")
    terms, bound, q = _sprugnoli_family(z)
    return _run(terms, bound, q, tol, max_terms, n_last)


def _split_coefficients(spec: WeightSpec) -> Tuple[float, float, float, float]:
    """Binet-split data (c_plus, c_minus, z_plus, z_minus) for fib/luc sums.

    The golden weight is opened with the Binet formulas, leaving two plain
    power-weighted sums at arguments inside the unit disk:

      unscaled:  z+ = alpha^2/4,   z- = beta^2/4
      scaled:    z+ = alpha^r/L_r, z- = beta^r/L_r   (r even)

    and the combination c+ * S(z+) + c- * S(z-) with c = alpha^s, beta^s
    weights (divided by sqrt5 and with a sign flip for Fibonacci).
    """
    if spec.kind not in ("fib", "luc"):
        raise ValueError("split is defined for fib/luc kinds only")
    s = spec.s
    if spec.lucas_scaled:
        r = spec.r
        if r < 0 or r % 2 != 0:
            raise DomainError(f"lucas-scaled weights require even r >= 0, got r={r}")
        lr = float(lucas(r))
        z_plus = _ALPHA**r / lr
        z_minus = _BETA**r / lr
    else:
        if spec.r != 2:
            raise DomainError("unscaled fib/luc weights are defined for r=2 only")
        z_plus = _ALPHA**2 / 4.0
        z_minus = _BETA**2 / 4.0
    if not z_plus < 1.0:
        raise DomainError(f"split argument {z_plus} is outside the unit disk")
    c_plus = _ALPHA**s
    c_minus = _BETA**s
    if spec.kind == "fib":
        return c_plus / _SQRT5, -c_minus / _SQRT5, z_plus, z_minus
    return c_plus, c_minus, z_plus, z_minus


def sum_weighted(
    spec: WeightSpec,
    tol: float = 1e-12,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Sum the series selected by ``spec`` with a certified tail bound.

    Golden-weighted kinds are evaluated through the Binet split (two plain
    sums at sub-unit arguments) so Fibonacci growth never overflows floats;
    each sub-sum receives a proportional share of the tolerance.
    """
    kind = spec.kind
    if kind in ("plain", "power"):
        return sum_g(0 if kind == "plain" else spec.m, _as_float_z(spec), tol, max_terms)
    if kind == "f":
        return sum_f(_as_float_z(spec), tol, max_terms)
    if kind == "integrated":
        return sum_integrated(_as_float_z(spec), tol, max_terms)
    if kind == "sprugnoli":
        return sum_sprugnoli(_as_float_z(spec), tol, max_terms)
    if kind in ("fib", "luc"):
        c_plus, c_minus, z_plus, z_minus = _split_coefficients(spec)
        tol_plus = tol / (2.0 * max(abs(c_plus), 1e-30))
        tol_minus = tol / (2.0 * max(abs(c_minus), 1e-30))
        res_plus = sum_g(spec.m, z_plus, tol_plus, max_terms)
        res_minus = sum_g(spec.m, z_minus, tol_minus, max_terms)
        return SeriesResult(
            value=c_plus * res_plus.value + c_minus * res_minus.value,
            tail_bound=abs(c_plus) * res_plus.tail_bound + abs(c_minus) * res_minus.tail_bound,
            terms_used=max(res_plus.terms_used, res_minus.terms_used),
            converged=res_plus.converged and res_minus.converged,
        )
    raise ValueError(f"unknown weight kind {kind!r}")


def _as_float_z(spec: WeightSpec) -> float:
    if spec.z is None:
        raise ValueError(f"weight kind {spec.kind!r} requires z")
    return float(spec.z)


def partial_value(spec: WeightSpec, n_last: int) -> float:
    """Float partial sum through index n_last inclusive (Binet split applied
    to golden-weighted kinds), for cross-checks against :func:`exact_partial`."""
    if n_last < 0:
        raise ValueError("n_last must be >= 0")
    if spec.kind in ("fib", "luc"):
        c_plus, c_minus, z_plus, z_minus = _split_coefficients(spec)
        res_plus = sum_g(spec.m, z_plus, tol=0.0, n_last=n_last)
        res_minus = sum_g(spec.m, z_minus, tol=0.0, n_last=n_last)
        return c_plus * res_plus.value + c_minus * res_minus.value
    if spec.kind in ("plain", "power"):
        return sum_g(0 if spec.kind == "plain" else spec.m, _as_float_z(spec), n_last=n_last).value
    if spec.kind == "f":
        return sum_f(_as_float_z(spec), n_last=n_last).value
    if spec.kind == "integrated":
        return sum_integrated(_as_float_z(spec), n_last=n_last).value
    if spec.kind == "sprugnoli":
        return sum_sprugnoli(_as_float_z(spec), n_last=n_last).value
    raise ValueError(f"unknown weight kind {spec.kind!r}")


def exact_partial(spec: WeightSpec, n_last: int) -> Fraction:
    """Exact rational partial sum through index n_last inclusive.

    Requires a rational argument (floats convert exactly).  Intended for
    desk-scale n_last (a few hundred); all arithmetic is exact.
    """
    if n_last < 0:
        raise ValueError("n_last must be >= 0")
    kind = spec.kind
    if kind in ("plain", "power", "f", "integrated", "sprugnoli"):
        z = spec.z if isinstance(spec.z, Fraction) else Fraction(_as_float_z(spec))
        total = Fraction(0)
        m = 0 if kind == "plain" else spec.m
        for n in range(n_last + 1):
            if kind == "f":
                total += z**n / catalan(n)
                continue
            base = Fraction(4**n) * z**n / ((2 * n + 1) * catalan(n))
            if kind == "power" or kind == "plain":
                total += n**m * base
            elif kind == "integrated":
                total += base / ((n + 1) * (n + 2))
            else:  # sprugnoli: 4^n z^(n+1) / ((2n+1) (n+1) C_n)
                total += base * z / (n + 1)
        return total
    if kind in ("fib", "luc"):
        seq = fibonacci if kind == "fib" else lucas
        total = Fraction(0)
        for n in range(n_last + 1):
            if spec.lucas_scaled:
                if spec.r < 0 or spec.r % 2 != 0:
                    raise DomainError("lucas-scaled weights require even r >= 0")
                w = Fraction(4**n * seq(spec.r * n + spec.s), lucas(spec.r) ** n)
            else:
                if spec.r != 2:
                    raise DomainError("unscaled fib/luc weights are defined for r=2 only")
                w = Fraction(seq(2 * n + spec.s))
            total += n**spec.m * w / ((2 * n + 1) * catalan(n))
        return total
    raise ValueError(f"unknown weight kind {kind!r}")
