"""Eulerian polynomials and zigzag (secant-tangent) numbers.

The Eulerian polynomial used here is normalized so that

    A_n(T) = (1 - T)^(n+1) * (1 + 2^n T + 3^n T^2 + ...),

i.e. A_n has degree n - 1 for n >= 1 (A_0 = 1) and its coefficients are
the classical Eulerian numbers.  Zigzag numbers E_n are the integers with
sum E_n z^n / n! = sec z + tan z.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .poly import Polynomial


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple:
    # Triangle recurrence <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>.
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)
    width = max(n, 1)
    row = [0] * width
    for k in range(width):
        val = 0
        if k < len(prev):
            val += (k + 1) * prev[k]
        if k - 1 >= 0 and k - 1 < len(prev):
            val += (n - k) * prev[k - 1]
        row[k] = val
    return tuple(row)


def eulerian_polynomial(n: int) -> Polynomial:
    """The n-th Eulerian polynomial, computed by the triangle recurrence.

    Degree is max(n - 1, 0); the coefficient list is palindromic and the
    coefficients sum to n!.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return Polynomial(_eulerian_row(n))


def zigzag_numbers(n: int) -> list:
    """Zigzag numbers E_0..E_n (1, 1, 1, 2, 5, 16, 61, 272, ...).

    Computed by the boustrophedon (Seidel triangle) recurrence: each row
    is the reversed running sum of the previous one, seeded with 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [1]
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0]
        for k in range(1, m + 1):
            row.append(row[k - 1] + prev[m - k])
        out.append(row[m])
    return out


def zigzag_coefficient(n: int) -> Fraction:
    """Coefficient of z^n in sec z + tan z, i.e. E_n / n!."""
    return Fraction(zigzag_numbers(n)[n], factorial(n))
