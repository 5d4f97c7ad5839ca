"""Dense matrices over F_p with deterministic rank computation."""

from __future__ import annotations

import numpy as np

from .primes import is_prime


class ModMatrix:
    """Dense matrix of residues mod a prime p.

    Rank is computed by exact Gaussian elimination over F_p with a
    deterministic pivot rule (first row with a nonzero entry, in column
    order), so repeated runs give identical results.  Entries stay in
    [0, p); p is small enough that intermediate int64 products never
    overflow.
    """

    __slots__ = ("p", "entries")

    def __init__(self, p: int, entries):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("entries must be two-dimensional")
        self.p = p
        self.entries = arr % p

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "ModMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def rank(self) -> int:
        p = self.p
        a = self.entries.copy()
        n_rows, n_cols = a.shape
        r = 0
        for c in range(n_cols):
            if r == n_rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            pivot = r + int(nz[0])
            if pivot != r:
                a[[r, pivot]] = a[[pivot, r]]
            inv = pow(int(a[r, c]), -1, p)
            a[r] = a[r] * inv % p
            below = a[r + 1 :, c]
            if below.size:
                a[r + 1 :] = (a[r + 1 :] - np.outer(below, a[r])) % p
            r += 1
        return r
