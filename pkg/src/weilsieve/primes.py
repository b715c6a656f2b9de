"""Deterministic prime enumeration and trial-division factorization.

Everything here is desk scale: candidate moduli stay below a few thousand and
scan ranges below 1e7, so a plain byte sieve plus trial division is exact and
fast enough.  No probabilistic primality testing anywhere.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

DEFAULT_SIEVE_BOUND = 10_000_000

_cache_bound = 0
_cache_primes: list[int] = []


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending.  The underlying sieve grows and is reused."""
    global _cache_bound, _cache_primes
    if n > _cache_bound:
        bound = max(n, 2 * _cache_bound, 1 << 10)
        sieve = bytearray([1]) * (bound + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(bound) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
        _cache_primes = [i for i, flag in enumerate(sieve) if flag]
        _cache_bound = bound
    return _cache_primes[: bisect_right(_cache_primes, n)]


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes in the closed interval [lo, hi]."""
    ps = primes_up_to(hi)
    return ps[bisect_left(ps, lo) :]


def odd_primes_up_to(n: int) -> list[int]:
    return [p for p in primes_up_to(n) if p != 2]


def is_prime(n: int, sieve_bound: int = DEFAULT_SIEVE_BOUND) -> bool:
    """Exact primality by trial division; certifiable for n < sieve_bound**2."""
    if n < 2:
        return False
    root = math.isqrt(n)
    if root > sieve_bound:
        raise ValueError(f"{n} exceeds the deterministic certification range")
    for p in primes_up_to(root):
        if n % p == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: multiplicity} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    m = n
    for p in primes_up_to(math.isqrt(n)):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        if m == 1:
            break
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    out = [1]
    for p, k in factorize(n).items():
        out = [d * p**i for d in out for i in range(k + 1)]
    return sorted(out)


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))
