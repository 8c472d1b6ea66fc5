"""Exact integer combinatorics helpers shared by the spectrum formulas."""

from __future__ import annotations

import math

__all__ = ["binom", "ceil_div"]


def binom(t: int, k: int) -> int:
    """Generalized binomial coefficient t(t-1)...(t-k+1)/k!.

    Defined for every integer ``t`` (negative included) and k >= 0, e.g.
    binom(-1, 2) == 1.  Always an exact integer: the falling factorial of
    any integer is divisible by k!.
    """
    if k < 0:
        raise ValueError(f"binom needs k >= 0, got {k}")
    num = 1
    for i in range(k):
        num *= t - i
    return num // math.factorial(k)


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for a >= 0, b >= 1, without rational intermediates."""
    if a < 0 or b <= 0:
        raise ValueError(f"ceil_div needs a >= 0 and b >= 1, got {a}/{b}")
    return (a + b - 1) // b
