"""Colengths of diagonal-hypersurface ideals over F_p.

Two independent routes to the colength of (x_1 + ... + x_s, x_1^{a_1},
..., x_s^{a_s}) in F_p[x_1..x_s]:

* ``colength_formula`` sums coefficients of the product polynomial
  prod_i (1 + t + ... + t^{a_i - 1}) at exponents congruent to gamma
  mod p, where gamma = floor(sum(a_i - 1) / 2).  Valid for a_i <= p.
* ``colength_bruteforce`` eliminates the linear generator, builds the
  multiplication matrix of (x_2 + ... + x_s)^{a_1} on the monomial box
  F_p[x_2..x_s]/(x_2^{a_2}, ..., x_s^{a_s}), and returns dim - rank.

``frobenius_colength`` computes the colength of (sum_i x_i^{d_i},
x_1^p, ..., x_s^p), the quantity whose p -> infinity normalization is
the Hilbert-Kunz multiplicity.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from math import prod

from .modp import ModMatrix
from .primes import is_prime

MAX_DIM = 5000
WARN_DIM = 3000


@dataclass(frozen=True)
class HKInstance:
    """Problem data: exponents d_1..d_s of a diagonal form sum x_i^{d_i}."""

    d: tuple

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        object.__setattr__(self, "d", d)
        if len(d) < 2:
            raise ValueError("need at least two variables (s >= 2)")
        if any(v < 1 for v in d):
            raise ValueError("every exponent d_i must be >= 1")

    @property
    def s(self) -> int:
        return len(self.d)

    @property
    def dprod(self) -> int:
        return prod(self.d)


@dataclass(frozen=True)
class ColengthArgs:
    """Arguments (p, a) of a colength evaluation; gamma is always derived."""

    p: int
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if len(self.a) < 2:
            raise ValueError("need at least two exponents (s >= 2)")
        if any(v < 0 for v in self.a):
            raise ValueError("exponents must be non-negative")

    @property
    def gamma(self) -> int:
        return sum(v - 1 for v in self.a) // 2


def product_coefficients(a) -> list:
    """Integer coefficients of prod_i (1 + t + ... + t^{a_i - 1}).

    The result is palindromic of degree sum(a_i - 1); an entry a_i = 0
    contributes the zero polynomial, making the whole product zero
    (returned as an empty list).
    """
    coeffs = [1]
    for ai in a:
        if ai < 0:
            raise ValueError("exponents must be non-negative")
        if ai == 0:
            return []
        out = [0] * (len(coeffs) + ai - 1)
        for i, c in enumerate(coeffs):
            if c:
                for j in range(ai):
                    out[i + j] += c
        coeffs = out
    return coeffs


def colength_formula(p: int, a) -> int:
    """Colength of (x_1 + ... + x_s, x_1^{a_1}, ..., x_s^{a_s}) by the
    coefficient-sum formula: sum over lambda of the coefficients of
    t^(gamma + lambda*p) in the product polynomial.

    Requires every a_i <= p; larger exponents fall outside the formula's
    hypothesis and must go through colength_bruteforce.
    """
    args = ColengthArgs(p, tuple(a))
    if any(v > p for v in args.a):
        raise ValueError(
            f"formula requires every exponent <= p = {p}; got {args.a} "
            "(use colength_bruteforce instead)"
        )
    if any(v == 0 for v in args.a):
        return 0
    coeffs = product_coefficients(args.a)
    gamma = args.gamma
    total = 0
    # exponents gamma + lambda*p inside [0, deg]
    lam_lo = -(gamma // p)
    lam_hi = (len(coeffs) - 1 - gamma) // p
    for lam in range(lam_lo, lam_hi + 1):
        total += coeffs[gamma + lam * p]
    return total


def _box_basis(bounds):
    """Monomial basis of F_p[x]/(x_i^{bounds_i}) in lexicographic order."""
    return list(itertools.product(*(range(b) for b in bounds)))


def _check_dim(dim: int, max_dim: int, what: str):
    if dim > max_dim:
        raise ValueError(
            f"{what} needs a {dim} x {dim} matrix, above the limit "
            f"max_dim = {max_dim}; raise max_dim to force it"
        )
    if dim > WARN_DIM:
        warnings.warn(f"{what}: {dim} x {dim} elimination will be slow", stacklevel=3)


def colength_bruteforce(p: int, a, max_dim: int = MAX_DIM) -> int:
    """Same colength as colength_formula, via linear algebra over F_p.

    Eliminating x_1 = -(x_2 + ... + x_s) identifies the quotient with
    R/(g) where R = F_p[x_2..x_s]/(x_2^{a_2}, ..., x_s^{a_s}) and
    g = (x_2 + ... + x_s)^{a_1}; the colength is dim R - rank of the
    multiplication-by-g map.  Unlike the formula this needs no a_i <= p
    hypothesis, but every a_i must be >= 1.
    """
    args = ColengthArgs(p, tuple(a))
    if any(v < 1 for v in args.a):
        raise ValueError("brute-force route requires every exponent >= 1")
    bounds = args.a[1:]
    dim = prod(bounds)
    _check_dim(dim, max_dim, "colength_bruteforce")

    exps = _box_basis(bounds)
    strides = []
    acc = 1
    for b in reversed(bounds):
        strides.append(acc)
        acc *= b
    strides.reverse()

    # g = (x_2 + ... + x_s)^{a_1} as a dense vector over the box basis
    g = [0] * dim
    g[0] = 1
    for _ in range(args.a[0]):
        nxt = [0] * dim
        for idx, c in enumerate(g):
            if c:
                e = exps[idx]
                for i, b in enumerate(bounds):
                    if e[i] + 1 < b:
                        nxt[idx + strides[i]] = (nxt[idx + strides[i]] + c) % p
        g = nxt

    mat = ModMatrix.zeros(p, dim, dim)
    m = mat.entries
    for j, f in enumerate(exps):
        for idx, c in enumerate(g):
            if c:
                e = exps[idx]
                target = 0
                for i, b in enumerate(bounds):
                    t = e[i] + f[i]
                    if t >= b:
                        break
                    target += t * strides[i]
                else:
                    m[target, j] = (m[target, j] + c) % p
    return dim - mat.rank()


def frobenius_colength(p: int, d, max_dim: int = MAX_DIM) -> int:
    """Colength of (sum_i x_i^{d_i}, x_1^p, ..., x_s^p) in F_p[x_1..x_s].

    Builds the multiplication matrix of h = sum_i x_i^{d_i} on the box
    F_p[x]/(x_1^p, ..., x_s^p); terms with d_i >= p lie in the ideal and
    drop out.  Returns p^s - rank.
    """
    inst = HKInstance(tuple(d))
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    s = inst.s
    dim = p**s
    _check_dim(dim, max_dim, "frobenius_colength")

    bounds = (p,) * s
    exps = _box_basis(bounds)
    strides = [p ** (s - 1 - i) for i in range(s)]
    shifts = [(i, di) for i, di in enumerate(inst.d) if di < p]

    mat = ModMatrix.zeros(p, dim, dim)
    m = mat.entries
    for j, f in enumerate(exps):
        for i, di in shifts:
            if f[i] + di < p:
                m[j + di * strides[i], j] += 1
    m %= p
    return dim - mat.rank()


@dataclass(frozen=True)
class SandwichReport:
    """Two-sided bound d*D(u) <= e_1 <= d*D(v) on the Frobenius colength."""

    p: int
    d: tuple
    u: tuple
    v: tuple
    lower: int
    e1: int
    upper: int

    @property
    def holds(self) -> bool:
        return self.lower <= self.e1 <= self.upper


def sandwich_bounds(p: int, d, max_dim: int = MAX_DIM, v_rule: str = "ceil") -> SandwichReport:
    """Bracket the Frobenius colength between scaled colengths at u and v.

    u_i = floor(p / d_i) always; the upper argument is v_i = ceil(p / d_i)
    (default, the tightest integral choice) or u_i + 1 with
    v_rule="successor".  Successor breaks the formula hypothesis when
    d_i = 1 (v_i = p + 1), so that combination is rejected.
    """
    inst = HKInstance(tuple(d))
    u = tuple(p // di for di in inst.d)
    if v_rule == "ceil":
        v = tuple(-(-p // di) for di in inst.d)
    elif v_rule == "successor":
        v = tuple(ui + 1 for ui in u)
        if any(vi > p for vi in v):
            raise ValueError("v_rule='successor' gives v_i > p here; use v_rule='ceil'")
    else:
        raise ValueError(f"unknown v_rule {v_rule!r}")
    lower = inst.dprod * colength_formula(p, u)
    upper = inst.dprod * colength_formula(p, v)
    e1 = frobenius_colength(p, inst.d, max_dim)
    return SandwichReport(p, inst.d, u, v, lower, e1, upper)


def increment_bound_holds(p: int, u) -> bool:
    """Check that bumping every exponent by one grows the colength by at
    most s * p^(s-2).  Requires 1 <= u_i <= p - 1 so the formula applies
    on both sides."""
    u = tuple(int(v) for v in u)
    if any(not 1 <= ui <= p - 1 for ui in u):
        raise ValueError("every u_i must lie in [1, p-1]")
    s = len(u)
    before = colength_formula(p, u)
    after = colength_formula(p, tuple(ui + 1 for ui in u))
    return after - before <= s * p ** (s - 2)
