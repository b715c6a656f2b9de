"""Enumeration of totient decompositions 2g = sum n_d * phi(d).

A decomposition carries e = lcm of its support; the structural filters
(4 | e, prime divisors of e bounded by 2g + 1) are applied on request, so an
unfiltered enumeration can still exhibit the cases the filters kill.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import primes
from .ntheory import totient

MAX_G = 12


class CapacityError(ValueError):
    """g outside the supported desk-scale range [1, MAX_G]."""


@dataclass(frozen=True)
class Decomposition:
    """One solution of 2g = sum n_d * phi(d), with e = lcm of the support."""

    g: int
    parts: tuple[tuple[int, int], ...]  # (d, n_d) sorted by d, every n_d >= 1
    e: int

    def __post_init__(self) -> None:
        ds = [d for d, _ in self.parts]
        if ds != sorted(set(ds)):
            raise ValueError("parts must be sorted by d without repeats")
        if any(n < 1 for _, n in self.parts):
            raise ValueError("multiplicities must be >= 1")
        if sum(n * totient(d) for d, n in self.parts) != 2 * self.g:
            raise ValueError("totient sum does not equal 2g")
        if self.e != math.lcm(*ds):
            raise ValueError("e must be the lcm of the support")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.parts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)

    def multiplicity(self, d: int) -> int:
        return dict(self.parts).get(d, 0)

    def satisfies_e_filters(self) -> bool:
        """4 | e and every prime divisor of e bounded by 2g + 1."""
        if self.e % 4:
            return False
        return max(primes.prime_divisors(self.e), default=1) <= 2 * self.g + 1

    def sum_expression(self) -> str:
        terms = []
        for d, n in self.parts:
            terms.append(f"φ({d})" if n == 1 else f"{n}φ({d})")
        return "+".join(terms)

    def sort_key(self) -> tuple:
        return (self.support, tuple(n for _, n in self.parts))


def admissible_d(g: int) -> list[int]:
    """All d with phi(d) <= 2g and every prime divisor of d <= 2g + 1."""
    if g < 1:
        raise ValueError("g must be >= 1")
    bound = 8 * g * g + 2  # phi(d) >= sqrt(d/2), so phi(d) <= 2g forces d <= 8g^2
    out = []
    for d in range(1, bound + 1):
        if totient(d) <= 2 * g and max(primes.prime_divisors(d), default=1) <= 2 * g + 1:
            out.append(d)
    return out


def enumerate_decompositions(g: int, apply_filters: bool = True) -> list[Decomposition]:
    """Every multiset solution of sum n_d * phi(d) = 2g over admissible d.

    With apply_filters, only decompositions with 4 | e and prime divisors of
    e bounded by 2g + 1 are kept.  Output is in canonical order: lexicographic
    by sorted support, then by the multiplicity tuple.
    """
    if not 1 <= g <= MAX_G:
        raise CapacityError(f"g must be in [1, {MAX_G}]")
    ds = admissible_d(g)
    phis = [totient(d) for d in ds]
    out: list[Decomposition] = []

    def extend(idx: int, remaining: int, current: list[tuple[int, int]]) -> None:
        if remaining == 0:
            parts = tuple(sorted(current))
            e = math.lcm(*(d for d, _ in parts))
            out.append(Decomposition(g=g, parts=parts, e=e))
            return
        if idx == len(ds):
            return
        step = phis[idx]
        extend(idx + 1, remaining, current)
        for n in range(1, remaining // step + 1):
            current.append((ds[idx], n))
            extend(idx + 1, remaining - n * step, current)
            current.pop()

    extend(0, 2 * g, [])
    if apply_filters:
        out = [dec for dec in out if dec.satisfies_e_filters()]
    out.sort(key=Decomposition.sort_key)
    return out
