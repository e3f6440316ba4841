"""Closed forms of the Fibonacci/Lucas-weighted series as ClosedValue objects.

All coefficients are computed exactly in Q(sqrt5) from integer Fibonacci and
Lucas numbers; only the named constants (pi*omega, pi, arctan(beta^r)) are
floats.  Exactness matters: the linearity checks (the Fibonacci recursion
passing through the closed forms term-by-term) hold identically, so a typo
in any formula shows up as a reproducible rational mismatch rather than
float noise.

Theorem numbering used throughout the package (and the CLI ``fib`` command):

  theorem 1:  sum_{n>=0} F_{2n+s} / ((2n+1) C_n)        (and Lucas version)
  theorem 2:  sum_{n>=1} n F_{2n+s} / ((2n+1) C_n)      (and Lucas version)
  theorem 3:  sum_{n>=1} 4^n n F_{rn+s} / ((2n+1) L_r^n C_n), r even
              (and Lucas version)

Theorem 2 is stated without proof in the source material, so the
verification harness reports any numeric disagreement for it on a separate
channel instead of failing outright.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .closedform import (
    ALPHA_Q,
    ClosedValue,
    NamedConstant,
    ONE,
    PI,
    PI_OMEGA,
    QuadRational,
    SQRT5_Q,
    arctan_beta_pow,
    _SQRT5,
)
from .exact import fibonacci, lucas

__all__ = [
    "GoldenConstants",
    "golden_constants",
    "thm1_rhs",
    "thm2_rhs",
    "thm3_rhs",
    "thm3_instances",
    "example_table",
]


@dataclass(frozen=True)
class GoldenConstants:
    """Float views of alpha, beta, omega = sqrt(sqrt5 * alpha), sqrt5."""

    alpha: float
    beta: float
    omega: float
    sqrt5: float


def golden_constants() -> GoldenConstants:
    alpha = (1.0 + _SQRT5) / 2.0
    return GoldenConstants(
        alpha=alpha,
        beta=(1.0 - _SQRT5) / 2.0,
        omega=math.sqrt(_SQRT5 * alpha),
        sqrt5=_SQRT5,
    )


def _fq(n: int) -> QuadRational:
    return QuadRational.of(fibonacci(n))


def _lq(n: int) -> QuadRational:
    return QuadRational.of(lucas(n))


def _check_kind(kind: str) -> None:
    if kind not in ("F", "L"):
        raise ValueError("kind must be 'F' or 'L'")


def thm1_rhs(kind: str, s: int) -> ClosedValue:
    """Closed form of sum_{n>=0} F_{2n+s} (or L_{2n+s}) / ((2n+1) C_n).

    F:  [ 2 L_{s+1} + (4 sqrt5 pi omega / 25) ((2+2a) F_s + (4-a) F_{s-1}) ] / 5
    L:    2 F_{s+1} + (4 sqrt5 pi omega / 25) (2 F_s + a F_{s-1})

    with a the golden ratio.  Basis: {one, pi*omega}.
    """
    _check_kind(kind)
    two = QuadRational.of(2)
    if kind == "F":
        const = QuadRational.of(Fraction(2, 5)) * _lq(s + 1)
        pw = (
            SQRT5_Q
            * QuadRational.of(Fraction(4, 125))
            * ((two + ALPHA_Q * two) * _fq(s) + (QuadRational.of(4) - ALPHA_Q) * _fq(s - 1))
        )
    else:
        const = two * _fq(s + 1)
        pw = (
            SQRT5_Q
            * QuadRational.of(Fraction(4, 25))
            * (two * _fq(s) + ALPHA_Q * _fq(s - 1))
        )
    return ClosedValue([(const, ONE), (pw, PI_OMEGA)])


def thm2_rhs(kind: str, s: int) -> ClosedValue:
    """Closed form of sum_{n>=1} n F_{2n+s} (or L) / ((2n+1) C_n).

    F:  2 F_{s+1} + (8/5) F_s + (8 sqrt5 pi omega / 125)(sqrt5 a F_{s+1} + 2 F_s)
    L:  2 L_{s+1} + (8/5) L_s + (8 sqrt5 pi omega / 125)((6+a) F_{s+1} + 2 a^2 F_s)
    """
    _check_kind(kind)
    two = QuadRational.of(2)
    eight_fifth = QuadRational.of(Fraction(8, 5))
    scale = SQRT5_Q * QuadRational.of(Fraction(8, 125))
    if kind == "F":
        const = two * _fq(s + 1) + eight_fifth * _fq(s)
        pw = scale * (SQRT5_Q * ALPHA_Q * _fq(s + 1) + two * _fq(s))
    else:
        const = two * _lq(s + 1) + eight_fifth * _lq(s)
        pw = scale * ((QuadRational.of(6) + ALPHA_Q) * _fq(s + 1) + two * ALPHA_Q * ALPHA_Q * _fq(s))
    return ClosedValue([(const, ONE), (pw, PI_OMEGA)])


def _check_even_r(r: int) -> None:
    if r < 0 or r % 2 != 0:
        raise ValueError(f"r must be an even integer >= 0, got {r}")


def thm3_rhs(kind: str, r: int, s: int) -> ClosedValue:
    """Closed form of sum_{n>=1} 4^n n F_{rn+s} (or L) / ((2n+1) L_r^n C_n).

    Basis: {one, pi, arctan(beta^r)}.  Requires even r so the Binet split
    arguments alpha^r/L_r, beta^r/L_r lie inside the unit disk.
    """
    _check_kind(kind)
    _check_even_r(r)
    lr = _lq(r)
    half = QuadRational.of(Fraction(1, 2))
    quarter = QuadRational.of(Fraction(1, 4))
    four = QuadRational.of(4)
    sixteenth = QuadRational.of(Fraction(1, 16))
    atan_const = arctan_beta_pow(r)
    # shared pi coefficient: (4 L_{3r+s} - L_r L_{2r+s} + (4 F_{3r+s} - L_r F_{2r+s}) sqrt5) L_r^2 / 16
    pi_core = (
        four * _lq(3 * r + s)
        - lr * _lq(2 * r + s)
        + (four * _fq(3 * r + s) - lr * _fq(2 * r + s)) * SQRT5_Q
    ) * lr * lr * sixteenth
    if kind == "F":
        const = (_fq(3 * r + s) + lr * half * _fq(2 * r + s)) * lr * half
        atan = (lr * _lq(2 * r + s) - four * _lq(3 * r + s)) * lr * lr * quarter / SQRT5_Q
        pi_coeff = pi_core / SQRT5_Q
    else:
        const = (_lq(3 * r + s) + lr * half * _lq(2 * r + s)) * lr * half
        atan = (lr * _fq(2 * r + s) - four * _fq(3 * r + s)) * lr * lr * SQRT5_Q * quarter
        pi_coeff = pi_core
    return ClosedValue([(const, ONE), (pi_coeff, PI), (atan, atan_const)])


def thm3_instances(r: int) -> List[Tuple[str, ClosedValue]]:
    """The four displayed corollaries of theorem 3 for an even r.

    Each entry is (label, closed value) where the label names the series:

      "2F[(n-2)r]"  sum 2^{2n+1} n F_{(n-2)r} / ((2n+1) L_r^n C_n)
      "L[(n-2)r]"   sum 4^n n L_{(n-2)r} / ((2n+1) L_r^n C_n)
      "F[(n-3)r]"   sum 4^n n F_{(n-3)r} / ((2n+1) L_r^n C_n)
      "L[(n-3)r]"   sum 4^n n L_{(n-3)r} / ((2n+1) L_r^n C_n)

    The values are built from the printed instance formulas, independently
    of :func:`thm3_rhs`, so the two can be cross-checked.  At r = 0 the
    first pair collapses to 4 + pi.
    """
    _check_even_r(r)
    lr = _lq(r)
    fr = _fq(r)
    f2r = _fq(2 * r)
    atan_const = arctan_beta_pow(r)
    half = QuadRational.of(Fraction(1, 2))
    lr2 = lr * lr

    # F_{2r} + (L_r + 2 F_r sqrt5) pi L_r^2 / (4 sqrt5) - (L_r^3 / sqrt5) arctan(beta^r)
    i1 = ClosedValue(
        [
            (f2r, ONE),
            ((lr + QuadRational.of(2) * fr * SQRT5_Q) * lr2 * QuadRational.of(Fraction(1, 4)) / SQRT5_Q, PI),
            (-(lr2 * lr) / SQRT5_Q, atan_const),
        ]
    )
    # L_r^2 + (L_r + 2 F_r sqrt5) pi L_r^2 / 8 - F_r L_r^2 sqrt5 arctan(beta^r)
    i2 = ClosedValue(
        [
            (lr2, ONE),
            ((lr + QuadRational.of(2) * fr * SQRT5_Q) * lr2 * QuadRational.of(Fraction(1, 8)), PI),
            (-(fr * lr2 * SQRT5_Q), atan_const),
        ]
    )
    # -(1/4) L_r^2 F_r + (8 - L_r^2 + F_{2r} sqrt5) pi L_r^2 sqrt5 / 80
    #   + (L_r^2 - 8) L_r^2 sqrt5 arctan(beta^r) / 20
    eight = QuadRational.of(8)
    i3 = ClosedValue(
        [
            (-(lr2 * fr) * QuadRational.of(Fraction(1, 4)), ONE),
            ((eight - lr2 + f2r * SQRT5_Q) * lr2 * SQRT5_Q * QuadRational.of(Fraction(1, 80)), PI),
            ((lr2 - eight) * lr2 * SQRT5_Q * QuadRational.of(Fraction(1, 20)), atan_const),
        ]
    )
    # (2 + L_r^2/2) L_r/2 + (8 - (-1)^r L_r^2 + F_{2r} sqrt5) pi L_r^2 / 16
    #   - (1/4) L_r^3 F_r sqrt5 arctan(beta^r)
    # (-1)^r is kept although r is even, mirroring the printed form.
    sign = QuadRational.of((-1) ** r)
    i4 = ClosedValue(
        [
            ((QuadRational.of(2) + lr2 * half) * lr * half, ONE),
            ((eight - sign * lr2 + f2r * SQRT5_Q) * lr2 * QuadRational.of(Fraction(1, 16)), PI),
            (-(lr2 * lr * fr * SQRT5_Q) * QuadRational.of(Fraction(1, 4)), atan_const),
        ]
    )
    return [("2F[(n-2)r]", i1), ("L[(n-2)r]", i2), ("F[(n-3)r]", i3), ("L[(n-3)r]", i4)]


def example_table() -> List[Tuple[str, str, int, ClosedValue]]:
    """The six published golden-weighted evaluations (sums from n = 1).

    Entries are (label, kind, s, value); each equals thm1_rhs(kind, s) minus
    the n = 0 term F_s (or L_s).  Values encode the printed formulas:

      F, s=0:  2/5 + 4 (7a - 6) pi omega / 125
      L, s=0:  4 (a + 2) pi omega / 25
      F, s=1:  1/5 + 8 (3a + 1) pi omega / 125
      L, s=1:  1 + 8 sqrt5 pi omega / 25
      F, s=-2: 3/5 + 8 (4a - 7) pi omega / 125
      L, s=-2: -1 + 8 (3 - a) pi omega / 25
    """
    a = ALPHA_Q

    def cv(const, coeff) -> ClosedValue:
        return ClosedValue([(QuadRational.of(const), ONE), (coeff, PI_OMEGA)])

    q = QuadRational.of
    return [
        ("F[2n]", "F", 0, cv(Fraction(2, 5), (q(7) * a - q(6)) * q(Fraction(4, 125)))),
        ("L[2n]", "L", 0, cv(0, (a + q(2)) * q(Fraction(4, 25)))),
        ("F[2n+1]", "F", 1, cv(Fraction(1, 5), (q(3) * a + q(1)) * q(Fraction(8, 125)))),
        ("L[2n+1]", "L", 1, cv(1, SQRT5_Q * q(Fraction(8, 25)))),
        ("F[2n-2]", "F", -2, cv(Fraction(3, 5), (q(4) * a - q(7)) * q(Fraction(8, 125)))),
        ("L[2n-2]", "L", -2, cv(-1, (q(3) - a) * q(Fraction(8, 25)))),
    ]
