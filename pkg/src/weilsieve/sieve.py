"""Congruence sieving of decompositions.

For each decomposition, the candidate character orders m_q are the even
divisors of e/2 exceeding 6.  Each candidate induces a congruence system on
the prime ell: ell ≡ 1 modulo every divisor of m_q, the exact two-adic
valuation of ell - 1 equals that of m_q, and ell ≢ 1 mod d for every part
with multiplicity one.  Candidates whose system is satisfiable survive with
a witness class; everything else is eliminated at this stage.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import primes
from .decomp import Decomposition, enumerate_decompositions
from .ntheory import (
    UNSAT,
    CongruenceSystem,
    ResidueClass,
    _UnsatType,
    make_congruence_system,
    solve_congruence_system,
    two_adic_valuation,
)

MQ_MINIMUM_EXCLUSIVE = 6  # orders 2, 4, 6 are impossible outright


@dataclass(frozen=True)
class MqOutcome:
    """Solve result for one (decomposition, m_q) candidate."""

    m_q: int
    system: CongruenceSystem | _UnsatType
    witness: ResidueClass | _UnsatType

    @property
    def sat(self) -> bool:
        return isinstance(self.witness, ResidueClass)


@dataclass(frozen=True)
class SurvivorCase:
    """A satisfiable (decomposition, m_q) pair with its witness class."""

    decomposition: Decomposition
    m_q: int
    witness: ResidueClass
    system: CongruenceSystem

    def __post_init__(self) -> None:
        if self.decomposition.e % 2 or (self.decomposition.e // 2) % self.m_q:
            raise ValueError("m_q must divide e/2")
        if self.m_q <= MQ_MINIMUM_EXCLUSIVE:
            raise ValueError("m_q must exceed 6")
        if self.system.two_adic_valuation != two_adic_valuation(self.m_q):
            raise ValueError("system must pin ord_2(ell-1) to ord_2(m_q)")


def mq_candidates(dec: Decomposition) -> list[MqOutcome]:
    """All candidate orders for one decomposition, ascending, with verdicts."""
    outcomes: list[MqOutcome] = []
    if dec.e % 2:
        return outcomes
    forbidden = {d for d, n in dec.parts if n == 1}
    ord2_e = two_adic_valuation(dec.e)
    for m_q in primes.divisors(dec.e // 2):
        if m_q <= MQ_MINIMUM_EXCLUSIVE or m_q % 2:
            continue
        a = two_adic_valuation(m_q)
        # implied by m_q | e/2; asserted rather than assumed
        assert a <= ord2_e - 1, "ord_2(ell-1) bound violated"
        system = make_congruence_system(
            required=primes.divisors(m_q),
            forbidden=forbidden,
            two_adic_valuation=a,
        )
        if system is UNSAT:
            outcomes.append(MqOutcome(m_q, UNSAT, UNSAT))
            continue
        outcomes.append(MqOutcome(m_q, system, solve_congruence_system(system)))
    return outcomes


def survivors(
    g: int, decompositions: list[Decomposition] | None = None
) -> list[SurvivorCase]:
    """Satisfiable cases over the filtered decompositions of g, canonical order."""
    if decompositions is None:
        decompositions = enumerate_decompositions(g, apply_filters=True)
    out: list[SurvivorCase] = []
    for dec in decompositions:
        for outcome in mq_candidates(dec):
            if outcome.sat:
                out.append(
                    SurvivorCase(
                        decomposition=dec,
                        m_q=outcome.m_q,
                        witness=outcome.witness,
                        system=outcome.system,
                    )
                )
    return out
