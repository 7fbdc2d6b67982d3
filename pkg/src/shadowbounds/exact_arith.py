"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator. Nothing in this package touches floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = ["Rational", "binom", "ceil_sqrt", "ceil_two_sqrt", "ceil_div"]


@lru_cache(maxsize=None)
def _binom(n: int, k: int) -> int:
    return math.comb(n, k)


def binom(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return _binom(n, k)


def ceil_sqrt(m: int) -> int:
    """Smallest t >= 0 with t*t >= m."""
    if m < 0:
        raise ValueError(f"ceil_sqrt requires m >= 0, got {m}")
    t = math.isqrt(m)
    return t if t * t == m else t + 1


def ceil_two_sqrt(m: int) -> int:
    """ceil(2*sqrt(m)), i.e. the smallest t >= 0 with t*t >= 4m."""
    if m < 0:
        raise ValueError(f"ceil_two_sqrt requires m >= 0, got {m}")
    return ceil_sqrt(4 * m)


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise ValueError(f"ceil_div requires a positive divisor, got {b}")
    return -((-a) // b)
