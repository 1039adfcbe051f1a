"""Exact integer arithmetic: triangular numbers and square-root tests.

Everything here works on arbitrary-size Python integers and never touches
floating point, so results stay exact at any magnitude.  The recurrence
machinery upstream multiplies values by roughly 2*kappa + 3 per step, so
terms blow past 64-bit range almost immediately; exactness is the whole
point of this module.
"""

from __future__ import annotations

import math

__all__ = ["triangular", "isqrt", "is_square", "tri_index"]


def triangular(t: int) -> int:
    """The t-th triangular number t*(t+1)/2."""
    if t < 0:
        raise ValueError("triangular index must be non-negative")
    return t * (t + 1) // 2


def isqrt(x: int) -> int:
    """Largest s with s*s <= x.

    Delegates to math.isqrt, which runs an exact integer Newton iteration
    with a proven floor result; float sqrt would misclassify near-squares
    beyond 2**53.
    """
    if x < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(x)


def is_square(x: int) -> bool:
    """True iff x is a perfect square (negatives are never squares)."""
    if x < 0:
        return False
    s = math.isqrt(x)
    return s * s == x


def tri_index(total: int) -> int | None:
    """Inverse of triangular(): the t with t*(t+1)/2 == total, else None.

    total is triangular exactly when 8*total + 1 is a perfect square (the
    root is then odd automatically), with t = (sqrt(8*total + 1) - 1) / 2.
    """
    if total < 0:
        return None
    d = 8 * total + 1
    s = math.isqrt(d)
    if s * s != d:
        return None
    return (s - 1) // 2
