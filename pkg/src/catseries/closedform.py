"""Exact symbolic values: rational-over-Q(sqrt5) combinations of named constants.

A :class:`ClosedValue` is a finite sum  sum_i  c_i * k_i  where each
coefficient c_i lives in the quadratic field Q(sqrt5) (exact) and each k_i
is a named transcendental or algebraic constant carried as a high-accuracy
float.  This keeps golden-ratio bookkeeping exact -- e.g. the coefficient
(7*alpha - 6)/125 of pi*omega is stored as an element of Q(sqrt5) -- while
only the final numeric evaluation rounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

__all__ = [
    "QuadRational",
    "NamedConstant",
    "ClosedValue",
    "ALPHA_Q",
    "BETA_Q",
    "SQRT5_Q",
    "ONE",
    "PI",
    "PI_SQUARED",
    "SQRT3_PI",
    "LN_ALPHA",
    "PI_OMEGA",
    "SQRT3_LN_2_MINUS_SQRT3",
    "SQRT21_LN_TERM",
    "arctan_beta_pow",
    "g_special_values",
    "f_special_values",
    "integrated_special_values",
]

_SQRT5 = math.sqrt(5.0)

Rationalish = Union[int, Fraction]


@dataclass(frozen=True)
class QuadRational:
    """Element a + b*sqrt(5) of the quadratic field Q(sqrt5)."""

    a: Fraction
    b: Fraction = Fraction(0)

    @staticmethod
    def of(a: Rationalish, b: Rationalish = 0) -> "QuadRational":
        return QuadRational(Fraction(a), Fraction(b))

    def __add__(self, other: "QuadRational") -> "QuadRational":
        return QuadRational(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadRational") -> "QuadRational":
        return QuadRational(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadRational":
        return QuadRational(-self.a, -self.b)

    def __mul__(self, other: "QuadRational") -> "QuadRational":
        # (a + b r)(c + d r) = ac + 5 bd + (ad + bc) r,  r = sqrt5
        return QuadRational(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __truediv__(self, other: "QuadRational") -> "QuadRational":
        norm = other.a * other.a - 5 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        conj = QuadRational(other.a, -other.b)
        num = self * conj
        return QuadRational(num.a / norm, num.b / norm)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt5"


def _q(a: Rationalish, b: Rationalish = 0) -> QuadRational:
    return QuadRational.of(a, b)


ALPHA_Q = _q(Fraction(1, 2), Fraction(1, 2))  # golden ratio (1 + sqrt5)/2
BETA_Q = _q(Fraction(1, 2), Fraction(-1, 2))  # conjugate (1 - sqrt5)/2
SQRT5_Q = _q(0, 1)


@dataclass(frozen=True)
class NamedConstant:
    """A named transcendental/algebraic constant with its numeric value."""

    key: str
    value: float


ONE = NamedConstant("one", 1.0)
PI = NamedConstant("pi", math.pi)
PI_SQUARED = NamedConstant("pi^2", math.pi * math.pi)
SQRT3_PI = NamedConstant("sqrt3*pi", math.sqrt(3.0) * math.pi)
LN_ALPHA = NamedConstant("ln(alpha)", math.log((1.0 + _SQRT5) / 2.0))
# omega = sqrt(sqrt5 * alpha) = sqrt(2 + alpha)
PI_OMEGA = NamedConstant("pi*omega", math.pi * math.sqrt(_SQRT5 * (1.0 + _SQRT5) / 2.0))
SQRT3_LN_2_MINUS_SQRT3 = NamedConstant(
    "sqrt3*ln(2-sqrt3)", math.sqrt(3.0) * math.log(2.0 - math.sqrt(3.0))
)
SQRT21_LN_TERM = NamedConstant(
    "ln((5-sqrt21)/2)/sqrt21",
    math.log((5.0 - math.sqrt(21.0)) / 2.0) / math.sqrt(21.0),
)


def arctan_beta_pow(r: int) -> NamedConstant:
    """arctan(beta^r) for even r >= 0 (beta = (1 - sqrt5)/2, so beta^r = alpha^-r)."""
    if r < 0 or r % 2 != 0:
        raise ValueError("arctan_beta_pow requires even r >= 0")
    beta = (1.0 - _SQRT5) / 2.0
    return NamedConstant(f"arctan(beta^{r})", math.atan(beta**r))


class ClosedValue:
    """Exact linear combination of named constants with Q(sqrt5) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[QuadRational, NamedConstant]] = ()):
        merged: Dict[str, Tuple[QuadRational, NamedConstant]] = {}
        for coeff, const in terms:
            if const.key in merged:
                prev, _ = merged[const.key]
                coeff = prev + coeff
            if coeff.is_zero():
                merged.pop(const.key, None)
            else:
                merged[const.key] = (coeff, const)
        object.__setattr__(self, "terms", merged)

    def __setattr__(self, name, value):
        raise AttributeError("ClosedValue is immutable")

    @staticmethod
    def of(*pairs: Tuple[Union[QuadRational, Rationalish], NamedConstant]) -> "ClosedValue":
        norm = []
        for coeff, const in pairs:
            if not isinstance(coeff, QuadRational):
                coeff = QuadRational.of(coeff)
            norm.append((coeff, const))
        return ClosedValue(norm)

    def value(self) -> float:
        return math.fsum(float(c) * k.value for c, k in self.terms.values())

    def __add__(self, other: "ClosedValue") -> "ClosedValue":
        return ClosedValue(list(self.terms.values()) + list(other.terms.values()))

    def __sub__(self, other: "ClosedValue") -> "ClosedValue":
        return ClosedValue(
            list(self.terms.values()) + [(-c, k) for c, k in other.terms.values()]
        )

    def scale(self, c: Union[QuadRational, Rationalish]) -> "ClosedValue":
        if not isinstance(c, QuadRational):
            c = QuadRational.of(c)
        return ClosedValue([(c * coeff, k) for coeff, k in self.terms.values()])

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedValue):
            return NotImplemented
        return (self - other).is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff, const = self.terms[key]
            parts.append(f"({coeff})*{const.key}" if key != "one" else f"({coeff})")
        return " + ".join(parts)

    __repr__ = __str__


def _cv(*pairs) -> ClosedValue:
    return ClosedValue.of(*pairs)


def g_special_values() -> Dict[Tuple[int, Fraction], ClosedValue]:
    """Closed values of g_m at the arguments with published evaluations.

    Keys are (m, z); z = 1/4, 1/2, 3/4 map the series weights 1, 2^n, 3^n,
    and the negative arguments give the alternating sums.
    """
    F14, F12, F34 = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    ln_alpha_coeff = _q(0, Fraction(-32, 125))  # -(32/(25 sqrt5)) = -(32 sqrt5)/125
    return {
        (0, F14): _cv((Fraction(2, 3), ONE), (Fraction(4, 27), SQRT3_PI)),
        (0, F12): _cv((1, ONE), (Fraction(1, 2), PI)),
        (0, F34): _cv((2, ONE), (Fraction(8, 9), SQRT3_PI)),
        (1, F14): _cv((Fraction(2, 3), ONE)),
        (1, -F14): _cv((Fraction(2, 25), ONE), (ln_alpha_coeff, LN_ALPHA)),
        (1, F12): _cv((2, ONE), (Fraction(1, 2), PI)),
        (1, -F12): _cv((Fraction(1, 9), SQRT3_LN_2_MINUS_SQRT3)),
        (1, F34): _cv((10, ONE), (Fraction(32, 9), SQRT3_PI)),
        (1, -F34): _cv((Fraction(-2, 49), ONE), (Fraction(32, 49), SQRT21_LN_TERM)),
        (2, F14): _cv((Fraction(2, 3), ONE), (Fraction(8, 81), SQRT3_PI)),
        (2, F12): _cv((6, ONE), (2, PI)),
        (2, F34): _cv((82, ONE), (Fraction(272, 9), SQRT3_PI)),
    }


def f_special_values() -> Dict[int, ClosedValue]:
    """Closed values of f(z) = sum z^n / C_n at z = 2 and z = 3."""
    return {
        2: _cv((5, ONE), (Fraction(3, 2), PI)),
        3: _cv((22, ONE), (8, SQRT3_PI)),
    }


def integrated_special_values() -> Dict[Fraction, ClosedValue]:
    """Closed value of the twice-divided series at z = 1/2: pi^2/8 - pi/2 + 1."""
    return {
        Fraction(1, 2): _cv((1, ONE), (Fraction(-1, 2), PI), (Fraction(1, 8), PI_SQUARED)),
    }
