"""Deterministic primality helpers (trial division / sieve; desk scale)."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in_range(lo: int, hi: int) -> list:
    """All primes p with lo <= p <= hi, by a sieve of Eratosthenes."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for f in range(2, int(hi**0.5) + 1):
        if sieve[f]:
            sieve[f * f :: f] = bytearray(len(sieve[f * f :: f]))
    return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]
