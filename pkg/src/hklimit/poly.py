"""Dense univariate polynomials with exact coefficients.

Coefficients are arbitrary-precision ints or Fractions, indexed by
exponent. The zero polynomial has an empty coefficient tuple; any other
polynomial has a nonzero trailing coefficient.
"""

from __future__ import annotations

from fractions import Fraction

_SCALARS = (int, Fraction)


class Polynomial:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __getitem__(self, exponent: int):
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        coeffs = list(a)
        for i, c in enumerate(b):
            coeffs[i] += c
        return Polynomial(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        coeffs = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    coeffs[i + j] += ca * cb
        return Polynomial(coeffs)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, _SCALARS):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial((1,))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, point):
        """Exact Horner evaluation at an int, Fraction or GaussianRational."""
        result = point * 0
        for c in reversed(self.coefficients):
            result = result * point + c
        return result

    __call__ = evaluate

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return not self.coefficients
            return self.coefficients == (other,)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                var = "T" if n == 1 else f"T^{n}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.coefficients!r})"


T = Polynomial((0, 1))
ONE = Polynomial((1,))
