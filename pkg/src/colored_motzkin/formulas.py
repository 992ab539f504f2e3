"""Closed-form counts of standard Young tableaux with at most 2, 3, 4 or 5 rows.

Everything is exact integer or rational arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

ExactRational = Fraction


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    """C(n, floor(n/2))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(n, n // 2)


def _five_rows(n: int) -> int:
    total = Fraction(0)
    for i in range(n // 2 + 1):
        total += Fraction(
            comb(n, 2 * i) * factorial(2 * i + 2) * catalan(i),
            factorial(i + 2) * factorial(i + 3),
        )
    total *= 6
    if total.denominator != 1:
        raise ArithmeticError(f"five-row count for n={n} is not an integer: {total}")
    return total.numerator


def syt_count_formula(n: int, d: int) -> int:
    """Number of n-cell SYTs with at most d rows, d in {2, 3, 4, 5}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if d == 2:
        return central_binomial(n)
    if d == 3:
        # Motzkin numbers; each term C(n,2i) * Catalan(i) is already an integer
        return sum(comb(n, 2 * i) * catalan(i) for i in range(n // 2 + 1))
    if d == 4:
        return catalan((n + 1) // 2) * catalan((n + 2) // 2)
    if d == 5:
        return _five_rows(n)
    raise NotImplementedError(f"no closed formula for d={d}; use count_syt_dp")
