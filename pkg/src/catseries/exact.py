"""Exact integer sequences and combinatorial identities.

Everything here is arbitrary-precision integer arithmetic: Catalan numbers,
binomials, factorials, Stirling numbers of the second kind, and Fibonacci /
Lucas numbers with the usual reflection rules for negative subscripts.
"""
from __future__ import annotations

import math
import threading
from typing import Callable, List

__all__ = [
    "SequenceTable",
    "catalan",
    "binomial",
    "factorial",
    "stirling2",
    "fibonacci",
    "lucas",
    "mellin_lemma_check",
]


class SequenceTable:
    """Append-only memo table for an integer sequence defined by a recursion.

    Reads of already-filled entries are lock-free; fills are serialized so
    concurrent callers cannot corrupt the table.
    """

    def __init__(self, kind: str, seed: List[int], step: Callable[[List[int], int], int]):
        self.kind = kind
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(self._values, len(self._values)))
            return self._values[n]

    def __len__(self) -> int:
        return len(self._values)


# (n+1) C_n = 2(2n-1) C_{n-1}; the division is exact.
_catalan_table = SequenceTable(
    "catalan", [1], lambda v, n: (2 * (2 * n - 1) * v[n - 1]) // (n + 1)
)
_fibonacci_table = SequenceTable("fibonacci", [0, 1], lambda v, n: v[n - 1] + v[n - 2])
_lucas_table = SequenceTable("lucas", [2, 1], lambda v, n: v[n - 1] + v[n - 2])


def catalan(n: int) -> int:
    """n-th Catalan number C_n = binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return _catalan_table(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


_stirling_rows: List[List[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k) via the triangle recursion.

    S(n, k) = k * S(n-1, k) + S(n-1, k-1), with S(0, 0) = 1 and S(n, 0) = 0
    for n >= 1.  Rows are cached.
    """
    if n < 0 or k < 0:
        raise ValueError("stirling2 requires n, k >= 0")
    if k > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                m = len(_stirling_rows)
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    above = prev[j] if j < len(prev) else 0
                    row[j] = j * above + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][k]


def fibonacci(n: int) -> int:
    """Fibonacci number for any integer index; F_{-n} = (-1)^(n+1) F_n."""
    if n >= 0:
        return _fibonacci_table(n)
    m = -n
    f = _fibonacci_table(m)
    return f if m % 2 == 1 else -f


def lucas(n: int) -> int:
    """Lucas number for any integer index; L_{-n} = (-1)^n L_n."""
    if n >= 0:
        return _lucas_table(n)
    m = -n
    v = _lucas_table(m)
    return v if m % 2 == 0 else -v


def mellin_lemma_check(m: int, n: int) -> bool:
    """Exactly test sum_j (-1)^j S(m+1, m+1-j) (n+m-j)! == n^m n!.

    This alternating factorial identity links Stirling numbers of the second
    kind to the power weights n^m; it underpins the Bessel-kernel integral
    representation built in :mod:`catseries.bessel`.
    """
    if m < 0 or n < 0:
        raise ValueError("mellin_lemma_check requires m, n >= 0")
    lhs = sum(
        (-1) ** j * stirling2(m + 1, m + 1 - j) * math.factorial(n + m - j)
        for j in range(m + 1)
    )
    return lhs == n**m * math.factorial(n)
