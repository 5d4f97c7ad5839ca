"""Truncated power series in z with exact coefficients.

Coefficients may be Fractions or Polynomials in an auxiliary variable T
(with Fraction coefficients); arithmetic is exact up to the truncation
order and silently discards higher terms.  The Cauchy product is the
naive one; all uses here are small, so orders are capped at MAX_ORDER.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .eulerian import eulerian_polynomial
from .poly import Polynomial

MAX_ORDER = 64


class TruncatedSeries:
    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients=()):
        if order < 0:
            raise ValueError("order must be non-negative")
        if order > MAX_ORDER:
            raise ValueError(f"order {order} exceeds MAX_ORDER = {MAX_ORDER}")
        coeffs = list(coefficients)
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than order allows")
        coeffs.extend(Fraction(0) for _ in range(order + 1 - len(coeffs)))
        self.order = order
        self.coefficients = tuple(coeffs)

    def __getitem__(self, n: int):
        return self.coefficients[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def _check_order(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coefficients, other.coefficients)]
        )

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coefficients])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncatedSeries(self.order, [c * other for c in self.coefficients])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coefficients[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Exact series division; the divisor's constant term must be invertible."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        d0 = other.coefficients[0]
        if d0 == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        out = []
        for n in range(self.order + 1):
            acc = self.coefficients[n]
            for k in range(1, n + 1):
                acc = acc - other.coefficients[k] * out[n - k]
            out.append(acc / d0)
        return TruncatedSeries(self.order, out)

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term, exact to the order."""
        if self.coefficients[0] != 0:
            raise ValueError("exp requires zero constant term")
        result = one(self.order)
        power = one(self.order)
        for k in range(1, self.order + 1):
            power = power * self
            result = result + power * Fraction(1, factorial(k))
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coefficients, other.coefficients)
        )

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {self.coefficients!r})"


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, [Fraction(1)])


def exp_series(order: int) -> TruncatedSeries:
    """e^z truncated: coefficients 1/n!."""
    return TruncatedSeries(order, [Fraction(1, factorial(n)) for n in range(order + 1)])


def sin_series(order: int) -> TruncatedSeries:
    coeffs = [
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 else Fraction(0)
        for n in range(order + 1)
    ]
    return TruncatedSeries(order, coeffs)


def cos_series(order: int) -> TruncatedSeries:
    coeffs = [
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 0 else Fraction(0)
        for n in range(order + 1)
    ]
    return TruncatedSeries(order, coeffs)


def sec_tan_series(order: int) -> TruncatedSeries:
    """sec z + tan z up to z^order, by exact division (1 + sin z) / cos z.

    Independent of the boustrophedon route in eulerian.zigzag_coefficient;
    the two must agree coefficient by coefficient.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    return (one(order) + sin_series(order)) / cos_series(order)


def eulerian_egf_residual(order: int) -> TruncatedSeries:
    """Residual of the Eulerian-polynomial generating identity.

    The exponential generating function S = sum_{n>=1} A_n(T)/(1-T)^n * z^n/n!
    satisfies S * (1 - T e^z) = e^z - 1.  Multiplying through by (1-T)^order
    clears every denominator, so the residual

        (sum_{n=1}^{order} A_n(T) (1-T)^(order-n) z^n/n!) * (1 - T e^z)
            - (1-T)^order (e^z - 1)

    is a series with polynomial coefficients that must vanish identically.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    n_max = order
    one_minus_t = Polynomial((1, -1))
    t = Polynomial((0, 1))

    lhs_coeffs = [Polynomial()]
    for n in range(1, n_max + 1):
        lhs_coeffs.append(
            eulerian_polynomial(n) * one_minus_t ** (n_max - n) * Fraction(1, factorial(n))
        )
    lhs = TruncatedSeries(n_max, lhs_coeffs)

    # 1 - T e^z, with polynomial coefficients
    mul_coeffs = [(-t) * Fraction(1, factorial(n)) for n in range(n_max + 1)]
    mul_coeffs[0] = one_minus_t
    multiplier = TruncatedSeries(n_max, mul_coeffs)

    # (1-T)^order * (e^z - 1)
    cleared = one_minus_t**n_max
    rhs_coeffs = [cleared * Fraction(1, factorial(n)) for n in range(n_max + 1)]
    rhs_coeffs[0] = Polynomial()
    rhs = TruncatedSeries(n_max, rhs_coeffs)

    return lhs * multiplier - rhs
