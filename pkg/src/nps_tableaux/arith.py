"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction`, which is always kept in reduced
form with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    """``H_n = 1 + 1/2 + ... + 1/n``; ``H_0 = 0``."""
    if n < 0:
        raise ValueError(f"harmonic number of negative index {n}")
    if n == 0:
        return Fraction(0)
    return harmonic(n - 1) + Fraction(1, n)


def inv_factorial(t: int) -> Fraction:
    """``1/t!`` with the convention that it vanishes for ``t < 0``."""
    return Fraction(0) if t < 0 else Fraction(1, math.factorial(t))


def det_rational(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals.

    The empty matrix has determinant 1.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    a = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, size):
            factor = a[r][col] / p
            if factor:
                row_r, row_c = a[r], a[col]
                for c in range(col, size):
                    row_r[c] -= factor * row_c[c]
    return det


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def as_integer(value: Number) -> int:
    """Convert an integral rational to ``int``; raise if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{value} is not an integer")
    return value.numerator


def format_rational(value: Number) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
