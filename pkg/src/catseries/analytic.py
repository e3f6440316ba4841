"""Closed-form evaluators built on the analytically continued kernel A(t).

The kernel

    A(t) = arctan(sqrt(t)) / sqrt(t)        for t > 0
         = 1                                at t = 0
         = artanh(sqrt(-t)) / sqrt(-t)      for -1 < t < 0

is one real-analytic function on (-1, inf); the artanh branch is exactly the
continuation needed for the alternating series (negative z), where the
evaluations pick up logarithms of quadratic irrationals.  Every closed form
in this module is assembled from A at t = z / (1 - z).
"""
from __future__ import annotations

import math

from .errors import DomainError
from .polynomials import p_pair_recursive

__all__ = [
    "kernel_A",
    "g_closed",
    "g_trig",
    "f_closed",
    "sprugnoli_closed",
    "g_transformed",
    "integrated_closed",
]

# Below this |t| the direct quotient is replaced by the Maclaurin series
# 1 - t/3 + t^2/5 - t^3/7 + t^4/9  (next term < 1e-21 at the cutoff).
_SMALL_T = 1e-4


def kernel_A(t: float) -> float:
    """Evaluate A(t) = arctan(sqrt(t))/sqrt(t), continued to -1 < t < 0."""
    if t <= -1.0:
        raise DomainError(f"kernel_A requires t > -1, got {t}")
    if abs(t) < _SMALL_T:
        return 1.0 + t * (-1.0 / 3.0 + t * (1.0 / 5.0 + t * (-1.0 / 7.0 + t / 9.0)))
    if t > 0:
        s = math.sqrt(t)
        return math.atan(s) / s
    s = math.sqrt(-t)
    return math.atanh(s) / s


def _check_unit_disk(z: float, who: str) -> None:
    if not -1.0 < z < 1.0:
        raise DomainError(f"{who} requires |z| < 1, got z={z}")


def g_closed(m: int, z: float) -> float:
    """Closed form of g_m(z) = sum 4^n n^m z^n / ((2n+1) C_n) for |z| < 1.

    Uses the exact degree-m polynomial pair (P1_m, P2_m):

        g_m(z) = P1_m(z)/(1-z)^(m+1) + P2_m(z)/(1-z)^(m+2) * A(z/(1-z)).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    _check_unit_disk(z, "g_closed")
    pair = p_pair_recursive(m)
    one_minus = 1.0 - z
    t = z / one_minus
    return (
        pair.p1.eval_float(z) / one_minus ** (m + 1)
        + pair.p2.eval_float(z) / one_minus ** (m + 2) * kernel_A(t)
    )


def g_trig(variant: int, z: float) -> float:
    """Trigonometric form of g_0 or g_1 with argument sin^2(z), |z| < pi/2.

    variant 0:  (1 / (2 cos^2 z)) * (1 + 2z / sin 2z)
    variant 1:  (1 / (4 cos^4 z)) * (2 - cos 2z + (1 - 2 cos 2z) * 2z / sin 2z)

    Both equal g_variant(sin^2 z); z = 0 is handled by 2z/sin 2z -> 1.
    """
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    if not -math.pi / 2 < z < math.pi / 2:
        raise DomainError(f"g_trig requires |z| < pi/2, got z={z}")
    ratio = 1.0 if z == 0.0 else 2.0 * z / math.sin(2.0 * z)
    c = math.cos(z)
    if variant == 0:
        return (1.0 + ratio) / (2.0 * c * c)
    c2 = math.cos(2.0 * z)
    return (2.0 - c2 + (1.0 - 2.0 * c2) * ratio) / (4.0 * c**4)


def f_closed(z: float) -> float:
    """Closed form of f(z) = sum z^n / C_n on 0 <= z < 4.

        f(z) = 2(z+8)/(4-z)^2 + 24 sqrt(z) arcsin(sqrt(z)/2) / (4-z)^(5/2)

    Negative arguments are not supported: the real form of the arcsin term
    for z < 0 is deliberately out of scope.
    """
    if not 0.0 <= z < 4.0:
        raise DomainError(f"f_closed requires 0 <= z < 4, got z={z}")
    if z == 0.0:
        return 1.0
    four_minus = 4.0 - z
    s = math.sqrt(z)
    return 2.0 * (z + 8.0) / four_minus**2 + 24.0 * s * math.asin(s / 2.0) / four_minus**2.5


def sprugnoli_closed(z: float) -> float:
    """Closed form of sum 4^n z^(n+1) / ((2n+1) binomial(2n, n)) for |z| < 1.

    Equals t * A(t) with t = z/(1-z): sqrt(t) arctan(sqrt(t)) for z >= 0 and
    -sqrt(-t) artanh(sqrt(-t)) for z < 0.
    """
    _check_unit_disk(z, "sprugnoli_closed")
    t = z / (1.0 - z)
    return t * kernel_A(t)


def g_transformed(variant: int, z: float, terms: int) -> float:
    """Partial sum of the rearranged series in powers of w = z/(1-z).

    variant 0:  (1-z)^-2 sum (-1)^n (n+1)/(2n+1) w^n
    variant 1:  (1-z)^-3 sum (-1)^n (n+1)(2z+n)/(2n+1) w^n

    Requires |w| < 1, i.e. z < 1/2.  Converges to g_variant(z).
    """
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    _check_unit_disk(z, "g_transformed")
    w = z / (1.0 - z)
    if abs(w) >= 1.0:
        raise DomainError(f"g_transformed requires |z/(1-z)| < 1 (z < 1/2), got z={z}")
    parts = []
    wn = 1.0
    for n in range(terms):
        c = (n + 1) / (2 * n + 1) * wn
        if n % 2:
            c = -c
        parts.append(c * (2.0 * z + n) if variant == 1 else c)
        wn *= w
    total = math.fsum(parts)
    return total / (1.0 - z) ** (2 + variant)


# Below this |z| the closed form of the twice-divided series loses too many
# digits to the 1/z and 1/z^2 cancellations; the series itself converges in
# a handful of terms there and is used instead.
_SMALL_Z_INTEGRATED = 1e-3


def integrated_closed(z: float) -> float:
    """Closed form of sum 4^n z^n / ((2n+1)(n+1)(n+2) C_n) for |z| < 1.

    In kernel form (valid on both branches, t = z/(1-z)):

        1/(2z) + A(t)^2 / (2 z (1-z)) - A(t)/z

    since arctan^2(sqrt t) = t A(t)^2 holds for either sign of t.  At z = 0
    the value is the leading series term 1/2.
    """
    _check_unit_disk(z, "integrated_closed")
    if abs(z) < _SMALL_Z_INTEGRATED:
        # series fallback: term ratio < |z| so ~8 terms reach 1e-17
        total, u = 0.0, 1.0
        for n in range(16):
            total += u / ((n + 1) * (n + 2))
            u *= z * 2.0 * (n + 2) / (2 * n + 3)
        return total
    a = kernel_A(z / (1.0 - z))
    return 1.0 / (2.0 * z) + a * a / (2.0 * z * (1.0 - z)) - a / z
