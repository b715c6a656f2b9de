"""Elementary number-theoretic kernel.

Totient, cyclotomic polynomials, Legendre symbols, reciprocity-forced
symbols, least odd quadratic nonresidues, and satisfiability of congruence
systems on a prime variable.  Conclusions about "the prime ell" are always
statements about residue classes: a returned witness class contains
infinitely many primes by Dirichlet, which is the intended reading wherever
a class is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from . import primes
from .intpoly import IntPoly, binomial


class _UnsatType:
    """Explicit unsatisfiability marker (singleton UNSAT)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNSAT"

    def __bool__(self) -> bool:
        return False


UNSAT = _UnsatType()


@dataclass(frozen=True)
class ResidueClass:
    """The arithmetic progression {residue + k*modulus}, gcd(residue, modulus)=1.

    The coprimality requirement keeps the class capable of containing primes.
    """

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must satisfy 0 <= r < modulus")
        if math.gcd(self.residue, self.modulus) != 1:
            raise ValueError("residue must be a unit modulo the modulus")

    def contains(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


@dataclass(frozen=True)
class CongruenceSystem:
    """Conditions on a prime ell: ell ≡ 1 mod d (required), ell ≢ 1 mod d
    (forbidden), and optionally ord_2(ell - 1) = two_adic_valuation exactly.

    d = 1 and d = 2 may never be forbidden (every odd prime is ≡ 1 mod 1 and
    mod 2); such a system is unsatisfiable by construction and must be built
    as the explicit UNSAT value via make_congruence_system, never silently.
    """

    required: frozenset[int]
    forbidden: frozenset[int]
    two_adic_valuation: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "required", frozenset(self.required))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        if any(d < 1 for d in self.required | self.forbidden):
            raise ValueError("moduli must be positive")
        if 1 in self.forbidden or 2 in self.forbidden:
            raise ValueError(
                "forbidding d in {1, 2} is unsatisfiable; "
                "use make_congruence_system to obtain UNSAT explicitly"
            )
        a = self.two_adic_valuation
        if a is not None and a < 0:
            raise ValueError("two_adic_valuation must be nonnegative")

    def modulus(self) -> int:
        m = math.lcm(*self.required, *self.forbidden, 1)
        if self.two_adic_valuation is not None:
            m = math.lcm(m, 2 ** (self.two_adic_valuation + 1))
        return m

    def admits(self, ell: int) -> bool:
        """Check the conditions against a concrete integer."""
        if any((ell - 1) % d for d in self.required):
            return False
        if any((ell - 1) % d == 0 for d in self.forbidden):
            return False
        a = self.two_adic_valuation
        if a is not None and two_adic_valuation(ell - 1) != a:
            return False
        return True


def make_congruence_system(
    required=(), forbidden=(), two_adic_valuation: int | None = None
) -> CongruenceSystem | _UnsatType:
    """Build a system, or return UNSAT when d in {1, 2} is forbidden."""
    forbidden = frozenset(forbidden)
    if 1 in forbidden or 2 in forbidden:
        return UNSAT
    return CongruenceSystem(
        required=frozenset(required),
        forbidden=forbidden,
        two_adic_valuation=two_adic_valuation,
    )


# ---------------------------------------------------------------------------
# scalar functions
# ---------------------------------------------------------------------------


def totient(n: int) -> int:
    """Euler's totient, via the factorization of n.

    >>> totient(11), totient(30), totient(1)
    (10, 8, 1)
    """
    if n < 1:
        raise ValueError("totient requires n >= 1")
    out = 1
    for p, k in primes.factorize(n).items():
        out *= (p - 1) * p ** (k - 1)
    return out


@cache
def cyclotomic_poly(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of T**d - 1."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if d == 1:
        return IntPoly((-1, 1))
    num = binomial(d, 1)
    den = IntPoly((1,))
    for dd in primes.divisors(d)[:-1]:
        den = den * cyclotomic_poly(dd)
    return num.exact_div(den)


def two_adic_valuation(n: int) -> int:
    """Largest a with 2**a | n, for n >= 1."""
    if n < 1:
        raise ValueError("two-adic valuation requires n >= 1")
    return (n & -n).bit_length() - 1


def legendre_symbol(a: int, ell: int) -> int:
    """Quadratic-residue symbol (a/ell) in {-1, 0, +1}, by Euler's criterion."""
    if ell % 2 == 0 or not primes.is_prime(ell):
        raise ValueError("modulus must be an odd prime")
    return _legendre(a, ell)


def _legendre(a: int, ell: int) -> int:
    t = pow(a % ell, (ell - 1) // 2, ell)
    if t == 0:
        return 0
    return 1 if t == 1 else -1


def forced_legendre(p: int, m_q: int) -> int | None:
    """The value of (p/ell) forced for all large primes ell with m_q | ell-1
    and ord_2(ell-1) = ord_2(m_q); None when no value is forced.

    When p | m_q we have ell ≡ 1 mod p, so (ell/p) = +1, and reciprocity
    leaves only the parity of (ell-1)/2, which the exact two-adic valuation
    pins down: odd iff ord_2(m_q) = 1.
    """
    if p == 2:
        raise ValueError("p = 2 is outside the modeled reciprocity rule")
    if p % 2 == 0 or not primes.is_prime(p):
        raise ValueError("p must be an odd prime")
    if m_q < 2 or m_q % 2:
        raise ValueError("m_q must be a positive even integer")
    if m_q % p:
        return None
    if two_adic_valuation(m_q) >= 2:
        return 1
    return 1 if p % 4 == 1 else -1


def least_odd_qnr(ell: int) -> int:
    """Smallest odd quadratic nonresidue modulo a prime ell >= 5.

    The result is necessarily prime; this is asserted, not assumed.
    """
    if ell in (2, 3):
        raise ValueError("ell in {2, 3} is degenerate and rejected")
    if ell % 2 == 0 or not primes.is_prime(ell):
        raise ValueError("modulus must be an odd prime")
    return _least_odd_qnr(ell)


def _least_odd_qnr(ell: int) -> int:
    n = 3
    while True:
        if _legendre(n, ell) == -1:
            assert primes.is_prime(n), "least odd nonresidue must be prime"
            return n
        n += 2


# ---------------------------------------------------------------------------
# congruence-system solving
# ---------------------------------------------------------------------------


def solve_congruence_system(system: CongruenceSystem) -> ResidueClass | _UnsatType:
    """Decide the system by exhaustive scan over units modulo its modulus.

    Returns the smallest qualifying residue class, or UNSAT.  The modulus
    stays small at desk scale, so the scan doubles as an auditable decision
    procedure.
    """
    m = system.modulus()
    a = system.two_adic_valuation
    for r in range(m):
        if math.gcd(r, m) != 1:
            continue
        if any((r - 1) % d for d in system.required):
            continue
        if any((r - 1) % d == 0 for d in system.forbidden):
            continue
        if a is not None:
            md = 2 ** (a + 1)
            if r % md != (1 + 2**a) % md:
                continue
        return ResidueClass(r, m)
    return UNSAT


def class_satisfies(system: CongruenceSystem, rc: ResidueClass) -> bool:
    """Re-check that every member of the class satisfies the system."""
    m, r = rc.modulus, rc.residue
    if any(m % d for d in system.required | system.forbidden):
        return False
    if any((r - 1) % d for d in system.required):
        return False
    if any((r - 1) % d == 0 for d in system.forbidden):
        return False
    a = system.two_adic_valuation
    if a is not None:
        md = 2 ** (a + 1)
        if m % md or r % md != (1 + 2**a) % md:
            return False
    return True
