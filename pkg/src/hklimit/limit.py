"""The large-p limit of the Hilbert-Kunz multiplicity of sum x_i^{d_i}.

For exponents d_i >= 2 the limit is an explicit rational number

    mu_inf = d * 2^(1-s) / (s-1)! * (C_0 + 2 * sum_{lam > 0} C_lam),

where d = prod d_i and C_lam (``limit_coefficient``) is a signed sum of
(sum_i eps_i/d_i - 2*lam)^(s-1) over sign tuples eps in {-1,+1}^s whose
base is positive.  C_lam vanishes for |lam| >= s/4, so the sum is finite.

The all-squares case d = (2,...,2) has two further exact routes: a sum
of signed binomial power sums over an arithmetic progression
(``multiplicity_limit_quadratic``), and 1 + the z^(s-1) coefficient of
sec z + tan z (``multiplicity_limit_sec_tan``).  All three must agree
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm, prod

from . import gaussian
from .colength import HKInstance, colength_formula
from .eulerian import eulerian_polynomial, zigzag_coefficient
from .gaussian import GaussianRational
from .poly import Polynomial
from .primes import is_prime

# 2^s sign tuples are enumerated as bitmasks; far beyond desk scale above this.
MAX_VARIABLES = 24


def limit_coefficient(lam: int, d) -> Fraction:
    """The signed sign-tuple sum C_lam for exponents d (all >= 2).

    Sums (eps_1 ... eps_s) * (eps_1/d_1 + ... + eps_s/d_s - 2*lam)^(s-1)
    over the sign tuples with strictly positive base, in exact rational
    arithmetic over the common denominator lcm(d).
    """
    d = tuple(int(v) for v in d)
    s = len(d)
    if s < 2:
        raise ValueError("need at least two exponents (s >= 2)")
    if s > MAX_VARIABLES:
        raise ValueError(f"s = {s} exceeds the sign-enumeration cap {MAX_VARIABLES}")
    if any(v < 2 for v in d):
        raise ValueError("limit coefficients require every d_i >= 2")
    scale = lcm(*d)
    weights = [scale // v for v in d]
    shift = 2 * lam * scale
    total = 0
    for mask in range(1 << s):
        base = -shift
        sign = 1
        for i in range(s):
            if mask >> i & 1:
                base += weights[i]
            else:
                base -= weights[i]
                sign = -sign
        if base > 0:
            total += sign * base ** (s - 1)
    return Fraction(total, scale ** (s - 1))


@dataclass(frozen=True)
class LimitResult:
    """Exact limit of the Hilbert-Kunz multiplicity as p grows.

    ``coefficients`` maps lam to C_lam for |lam| < s/4 (entries beyond
    that vanish and are omitted; the table is symmetric in lam <-> -lam).
    ``method`` classifies the instance: "degenerate-d_i=1" is the only
    shortcut (the limit is 1); for every other instance the value comes
    from the general sign-tuple formula, and the tag just records whether
    a specialized cross-check route exists ("s=2-min-rule", "quadratic")
    or not ("general").
    """

    multiplicity: Fraction
    coefficients: dict
    method: str


def multiplicity_limit(d, check_vanishing: bool = False) -> LimitResult:
    """Exact p -> infinity limit of the Hilbert-Kunz multiplicity.

    Any d_i = 1 forces the limit 1.  Otherwise the sign-tuple sums are
    enumerated for 0 <= lam <= ceil(s/4); with check_vanishing=True the
    range widens to lam <= s and the extra terms are asserted to vanish.
    """
    inst = HKInstance(tuple(d))
    s = inst.s
    if any(v == 1 for v in inst.d):
        return LimitResult(Fraction(1), {}, "degenerate-d_i=1")

    lam_hi = -(-s // 4)
    coeffs = {lam: limit_coefficient(lam, inst.d) for lam in range(lam_hi + 1)}
    if check_vanishing:
        for lam in range(lam_hi + 1, s + 1):
            extra = limit_coefficient(lam, inst.d)
            if extra != 0:
                raise AssertionError(f"C_{lam} = {extra} should vanish for |lam| >= s/4")
    total = coeffs[0] + 2 * sum(coeffs[lam] for lam in range(1, lam_hi + 1))
    mu = Fraction(inst.dprod, 2 ** (s - 1)) / factorial(s - 1) * total

    table = {}
    for lam in range(lam_hi + 1):
        if 4 * lam < s:
            table[lam] = coeffs[lam]
            if lam > 0:
                table[-lam] = coeffs[lam]
    if mu <= 0:
        raise AssertionError("limit multiplicity must be positive")

    if s == 2:
        method = "s=2-min-rule"
        if mu != min(inst.d):
            raise AssertionError(f"s=2 limit {mu} != min(d) = {min(inst.d)}")
    elif all(v == 2 for v in inst.d):
        method = "quadratic"
    else:
        method = "general"
    return LimitResult(mu, table, method)


def signed_power_sum(s: int, a: int) -> int:
    """a^(s-1) - C(s,1)(a-2)^(s-1) + C(s,2)(a-4)^(s-1) - ..., truncating
    each power at zero once the base goes negative.

    Vanishes for a <= 0 and for a > 2s - 1.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    total = 0
    for j in range(s + 1):
        c = a - 2 * j
        if c < 0:
            break
        total += (-1) ** j * comb(s, j) * c ** (s - 1)
    return total


def quadratic_sum(s: int) -> int:
    """Sum of signed_power_sum(s, a) over a congruent to s mod 4.

    Only 1 <= a <= 2s - 1 contributes (the support of signed_power_sum).
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    start = s % 4 or 4
    return sum(signed_power_sum(s, a) for a in range(start, 2 * s, 4))


def eulerian_gaussian_ratio(s: int) -> GaussianRational:
    """A_{s-1}(i) / (1+i)^(s-2), exactly.  Always real-valued."""
    if s < 2:
        raise ValueError("s must be >= 2")
    num = eulerian_polynomial(s - 1).evaluate(gaussian.I)
    return num / (GaussianRational(Fraction(1), Fraction(1)) ** (s - 2))


def quadratic_sum_via_eulerian(s: int) -> int:
    """quadratic_sum(s) recomputed from Eulerian-polynomial evaluations at
    the fourth roots of unity: 2^(s-2) * (A_{s-1}(1) + Re c) with
    c = A_{s-1}(i)/(1+i)^(s-2)."""
    c = eulerian_gaussian_ratio(s)
    if not c.is_real():
        raise AssertionError(f"Gaussian ratio for s = {s} is not real: {c}")
    value = (eulerian_polynomial(s - 1).evaluate(1) + c.real) * Fraction(2) ** (s - 2)
    if value.denominator != 1:
        raise AssertionError(f"root-of-unity sum for s = {s} is not integral: {value}")
    return int(value)


def multiplicity_limit_quadratic(s: int) -> Fraction:
    """All-squares limit via the signed-power-sum route:
    quadratic_sum(s) / ((s-1)! * 2^(s-2))."""
    return Fraction(quadratic_sum(s)) / (factorial(s - 1) * Fraction(2) ** (s - 2))


def multiplicity_limit_sec_tan(s: int) -> Fraction:
    """All-squares limit as 1 + the z^(s-1) coefficient of sec z + tan z."""
    if s < 2:
        raise ValueError("s must be >= 2")
    return 1 + zigzag_coefficient(s - 1)


def signed_power_sum_identity_holds(s: int) -> bool:
    """Check sum_a signed_power_sum(s, a) T^(a-1) == (1+T)^s A_{s-1}(T)."""
    lhs = Polynomial([signed_power_sum(s, a) for a in range(1, 2 * s)])
    rhs = Polynomial((1, 1)) ** s * eulerian_polynomial(s - 1)
    return lhs == rhs


@dataclass(frozen=True)
class ConvergenceRow:
    p: int
    a: tuple
    value: Fraction
    gap: Fraction
    p_times_gap: Fraction


def convergence_table(d, primes, a_rule: str = "floor-parity") -> list:
    """Normalized colengths d * p^(1-s) * D_p(a) against the exact limit.

    For each prime p the exponents a_i track p/d_i: a_i = floor(p/d_i),
    with a_1 bumped by one when needed to make sum(a_i) = s mod 2
    (a_rule="floor-parity", the default); "floor" and "ceil" skip the
    parity fix.  The last column p * |value - limit| stays bounded as p
    grows.  Every prime must be >= max(d_i) so that a_i >= 1.
    """
    inst = HKInstance(tuple(d))
    if any(v < 2 for v in inst.d):
        raise ValueError("convergence table requires every d_i >= 2")
    if a_rule not in ("floor-parity", "floor", "ceil"):
        raise ValueError(f"unknown a_rule {a_rule!r}")
    limit = multiplicity_limit(inst.d).multiplicity
    s = inst.s
    rows = []
    for p in sorted(primes):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < max(inst.d):
            raise ValueError(f"prime {p} is below max(d) = {max(inst.d)}")
        if a_rule == "ceil":
            a = [-(-p // di) for di in inst.d]
        else:
            a = [p // di for di in inst.d]
            if a_rule == "floor-parity" and (sum(a) - s) % 2:
                a[0] += 1
        a = tuple(a)
        value = Fraction(inst.dprod * colength_formula(p, a), p ** (s - 1))
        gap = abs(value - limit)
        rows.append(ConvergenceRow(p, a, value, gap, p * gap))
    return rows
