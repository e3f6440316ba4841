"""Exact rational polynomial families behind the closed forms of g_m.

Two coupled degree-m families P1_m, P2_m drive the closed-form
representation

    g_m(z) = P1_m(z) / (1-z)^(m+1) + P2_m(z) / (1-z)^(m+2) * A(z/(1-z)),

and a third family Q_m (a polynomial in u = z * (1 - x^2)) is the kernel of
the finite-interval integral representation

    g_m(z) = integral_{-1}^{1} Q_m(u) / (1 - u)^(m+2) dx.

Each family is built both by its recursion and by an explicit summation
formula; the two constructions must agree coefficient-by-coefficient, which
the test suite asserts.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

__all__ = [
    "RationalPolynomial",
    "PolyPair",
    "p_pair_recursive",
    "p_pair_closed",
    "q_kernel",
    "q_kernel_closed",
]


class RationalPolynomial:
    """Dense univariate polynomial with exact Fraction coefficients.

    Immutable; coefficients are stored lowest power first with trailing
    zeros stripped, so ``degree == len(coefficients) - 1`` (and -1 for the
    zero polynomial).
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Fraction | int]):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("RationalPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPolynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero() or other.is_zero():
            return RationalPolynomial([])
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RationalPolynomial(out)

    def scale(self, c: Fraction | int) -> "RationalPolynomial":
        c = Fraction(c)
        return RationalPolynomial([ci * c for ci in self.coefficients])

    def shift(self, k: int) -> "RationalPolynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return RationalPolynomial((Fraction(0),) * k + self.coefficients)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial([c * i for i, c in enumerate(self.coefficients)][1:])

    def __call__(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        """Horner evaluation in double precision."""
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def coefficient_strings(self) -> List[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coefficients)!r})"


_ZERO = RationalPolynomial([])
_HALF = RationalPolynomial([Fraction(1, 2)])


@dataclass(frozen=True)
class PolyPair:
    """The pair (P1_m, P2_m) for one power weight m."""

    m: int
    p1: RationalPolynomial
    p2: RationalPolynomial


def _z_one_minus_z_d(p: RationalPolynomial) -> RationalPolynomial:
    """z (1 - z) dp/dz."""
    dp = p.derivative()
    return dp.shift(1) - dp.shift(2)


_pair_cache: List[PolyPair] = [PolyPair(0, _HALF, _HALF)]
_pair_lock = threading.Lock()


def p_pair_recursive(m: int) -> PolyPair:
    """Build (P1_m, P2_m) by the coupled recursions.

    P1_m = z(1-z) P1_{m-1}' + m z P1_{m-1} + (1/2) P2_{m-1}
    P2_m = z(1-z) P2_{m-1}' + (m+1) z P2_{m-1} - (1/2) P2_{m-1}

    starting from P1_0 = P2_0 = 1/2.  Results are cached.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m < len(_pair_cache):
        return _pair_cache[m]
    with _pair_lock:
        while len(_pair_cache) <= m:
            k = len(_pair_cache)
            prev = _pair_cache[k - 1]
            p1 = _z_one_minus_z_d(prev.p1) + prev.p1.shift(1).scale(k) + prev.p2.scale(Fraction(1, 2))
            p2 = (
                _z_one_minus_z_d(prev.p2)
                + prev.p2.shift(1).scale(k + 1)
                + prev.p2.scale(Fraction(-1, 2))
            )
            _pair_cache.append(PolyPair(k, p1, p2))
    return _pair_cache[m]


def p_pair_closed(m: int) -> PolyPair:
    """Build (P1_m, P2_m) by the explicit summation formulas.

    P1_m = (1/2) m! z^m
           + sum_{j=0}^{m-1} C(m,j) j! z^j [ z(1-z) P1_{m-j-1}' + (1/2) P2_{m-j-1} ]

    P2_m = (1/2) prod_{j=1}^{m} ((j+1) z - 1/2)
           + z(1-z) sum_{j=1}^{m} P2_{m-j}' prod_{k=2}^{j} ((m+3-k) z - 1/2)

    Lower-order pairs are taken from this same construction (dynamic
    programming over m), so the route is independent of p_pair_recursive.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    pairs: List[PolyPair] = [PolyPair(0, _HALF, _HALF)]
    for mm in range(1, m + 1):
        # P1
        p1 = RationalPolynomial([Fraction(math.factorial(mm), 2)]).shift(mm)
        for j in range(mm):
            inner = _z_one_minus_z_d(pairs[mm - j - 1].p1) + pairs[mm - j - 1].p2.scale(
                Fraction(1, 2)
            )
            p1 = p1 + inner.shift(j).scale(math.comb(mm, j) * math.factorial(j))
        # P2
        prod = _HALF
        for j in range(1, mm + 1):
            prod = prod * RationalPolynomial([Fraction(-1, 2), Fraction(j + 1)])
        p2 = prod
        acc = _ZERO
        for j in range(1, mm + 1):
            term = pairs[mm - j].p2.derivative()
            for k in range(2, j + 1):
                term = term * RationalPolynomial([Fraction(-1, 2), Fraction(mm + 3 - k)])
            acc = acc + term
        p2 = p2 + _z_one_minus_z_times(acc)
        pairs.append(PolyPair(mm, p1, p2))
    return pairs[m]


def _z_one_minus_z_times(p: RationalPolynomial) -> RationalPolynomial:
    """z (1 - z) p, for sums whose derivative has already been taken."""
    return p.shift(1) - p.shift(2)


_q_cache: List[RationalPolynomial] = [_HALF]
_q_lock = threading.Lock()


def q_kernel(m: int) -> RationalPolynomial:
    """Kernel polynomial Q_m, expressed in the variable u = z (1 - x^2).

    The defining recursion Q_m = (m+1) a z Q_{m-1} + z (1 - a z) dQ_{m-1}/dz
    (with a = 1 - x^2) closes over u: substituting Q(u) and d/dz = a d/du
    turns it into

        Q_m(u) = (m+1) u Q_{m-1}(u) + u (1 - u) Q_{m-1}'(u),  Q_0 = 1/2.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m < len(_q_cache):
        return _q_cache[m]
    with _q_lock:
        while len(_q_cache) <= m:
            k = len(_q_cache)
            prev = _q_cache[k - 1]
            dq = prev.derivative()
            nxt = prev.shift(1).scale(k + 1) + (dq.shift(1) - dq.shift(2))
            _q_cache.append(nxt)
    return _q_cache[m]


def q_kernel_closed(m: int) -> RationalPolynomial:
    """Q_m by the explicit solution of its recursion (independent route).

    Q_m(u) = (1/2) (m+1)! u^m + u(1-u) Q_{m-1}'(u)
             + u(1-u) sum_{j=1}^{m-1} C(m+1,j) j! u^j Q_{m-j-1}'(u)
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    qs: List[RationalPolynomial] = [_HALF]
    for mm in range(1, m + 1):
        q = RationalPolynomial([Fraction(math.factorial(mm + 1), 2)]).shift(mm)
        acc = qs[mm - 1].derivative()
        for j in range(1, mm):
            acc = acc + qs[mm - j - 1].derivative().shift(j).scale(
                math.comb(mm + 1, j) * math.factorial(j)
            )
        q = q + (acc.shift(1) - acc.shift(2))
        qs.append(q)
    return qs[m]
