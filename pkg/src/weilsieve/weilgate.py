"""Binomial trace obstructions.

When the trace of the m_q-th Frobenius power at a prime p of known quadratic
symbol eps attains its extremal value, every Frobenius eigenvalue is a root
of T**m_q - eps * p**(m_q/2).  A degree-2g characteristic polynomial must
then be assembled from that binomial's irreducible factors with even
multiplicity on every real-rooted factor.  When no such assembly exists the
case is eliminated, and a certificate records the evidence.

Two kinds of route supply the prime: explicit odd primes dividing m_q whose
symbol is forced by reciprocity, and the least odd quadratic nonresidue,
available whenever m_q/2 stays below the Burgess exponent 4*sqrt(e).  The
nonresidue's identity is unknown, so the nonresidue route must fail the
assembly at every odd prime up to the certified bound.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .intpoly import IntPoly, binomial, factor_rational, real_root_count
from .primes import odd_primes_up_to, prime_divisors
from .ntheory import forced_legendre

# 4 * sqrt(Euler's number); strict comparison on the integer m_q/2, and
# 6 < 6.594... < 7 keeps every relevant case far from the boundary
BURGESS_WINDOW = 4.0 * math.sqrt(math.e)

DEFAULT_PRIME_BOUND = 1000

FactorShape = tuple[tuple[int, bool], ...]  # (degree, has_real_root), sorted


@dataclass(frozen=True)
class Route:
    """A source of a prime with known quadratic symbol.

    explicit-prime: a concrete odd prime dividing m_q whose symbol is forced;
    the trace window holds because p is fixed while ell grows.
    universal-odd-qnr: the least odd nonresidue; usable only when the window
    exponent m_q/2 beats the Burgess exponent, and then the obstruction must
    hold for every odd prime since the nonresidue's identity is unknown.
    """

    kind: str  # "explicit-prime" | "universal-odd-qnr"
    sign: int
    prime: int | None
    window_exponent: int
    window_ok: bool

    def __post_init__(self) -> None:
        if self.kind not in ("explicit-prime", "universal-odd-qnr"):
            raise ValueError("unknown route kind")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +-1")
        if self.kind == "explicit-prime" and (self.prime is None or not self.window_ok):
            raise ValueError("explicit routes carry a prime and an open window")
        if self.kind == "universal-odd-qnr" and (self.prime is not None or self.sign != -1):
            raise ValueError("nonresidue routes have sign -1 and no fixed prime")


@dataclass(frozen=True)
class PrimeEvidence:
    """Factor shape of the trace binomial at one prime, plus the assembly verdict."""

    factor_shape: FactorShape
    combination_exists: bool


@dataclass(frozen=True)
class EliminationCertificate:
    g: int
    m_q: int
    route: Route
    tested_primes: tuple[int, ...]
    per_prime: tuple[tuple[int, PrimeEvidence], ...]
    eliminated: bool
    notes: str

    def __post_init__(self) -> None:
        combos = [ev.combination_exists for _, ev in self.per_prime]
        if self.eliminated != (bool(combos) and not any(combos)):
            raise ValueError(
                "eliminated must hold iff the assembly fails at every tested prime"
            )


def trace_binomial(m_q: int, sign: int, p: int) -> IntPoly:
    """T**m_q - sign * p**(m_q/2), the polynomial annihilating all Frobenius
    eigenvalues when the trace of the m_q-th power attains sign * 2g * p**(m_q/2)."""
    if m_q % 2 or m_q < 2:
        raise ValueError("m_q must be a positive even integer")
    if sign not in (-1, 1):
        raise ValueError("sign must be +-1")
    return binomial(m_q, sign * p ** (m_q // 2))


def degree_combination_exists(factors, target: int) -> bool:
    """True iff nonnegative multiplicities m_i with sum m_i * deg_i = target
    exist, m_i even whenever the factor has a real root."""
    return find_degree_combination(factors, target) is not None


def find_degree_combination(factors, target: int):
    """A witness multiplicity assignment [(degree, real, multiplicity)] or None.

    Bounded exhaustive search over multiplicities <= target/degree.
    """
    if target < 2:
        raise ValueError("target degree must be >= 2")
    kinds = []
    seen = set()
    for deg, real in factors:
        if deg < 1:
            raise ValueError("factor degrees must be >= 1")
        if (deg, real) not in seen:
            seen.add((deg, real))
            kinds.append((deg, bool(real)))

    assignment: list[tuple[int, bool, int]] = []

    def search(idx: int, remaining: int):
        if remaining == 0:
            return True
        if idx == len(kinds):
            return False
        deg, real = kinds[idx]
        step = 2 * deg if real else deg
        for m in range(0, remaining // step + 1):
            if m:
                assignment.append((deg, real, m * (2 if real else 1)))
            if search(idx + 1, remaining - m * step):
                return True
            if m:
                assignment.pop()
        return False

    if search(0, target):
        return list(assignment)
    return None


def routes_for(m_q: int) -> list[Route]:
    """All usable routes for one order, deterministic: explicit primes
    ascending, then the universal nonresidue route with its window flag."""
    if m_q <= 6 or m_q % 2:
        raise ValueError("m_q must be even and exceed 6")
    out: list[Route] = []
    for p in prime_divisors(m_q):
        if p == 2:
            continue
        eps = forced_legendre(p, m_q)
        if eps is None:
            continue
        out.append(
            Route(
                kind="explicit-prime",
                sign=eps,
                prime=p,
                window_exponent=m_q // 2,
                window_ok=True,
            )
        )
    out.append(
        Route(
            kind="universal-odd-qnr",
            sign=-1,
            prime=None,
            window_exponent=m_q // 2,
            window_ok=m_q / 2 < BURGESS_WINDOW,
        )
    )
    return out


@lru_cache(maxsize=4096)
def factor_shape(m_q: int, sign: int, p: int) -> FactorShape:
    """Sorted multiset of (degree, has_real_root) over the irreducible factors
    of the trace binomial."""
    fac = factor_rational(trace_binomial(m_q, sign, p))
    shape: list[tuple[int, bool]] = []
    for poly, mult in fac.factors:
        entry = (poly.degree, real_root_count(poly) > 0)
        shape.extend([entry] * mult)
    return tuple(sorted(shape))


def _evaluate_prime(args: tuple[int, int, int, int]) -> tuple[int, PrimeEvidence]:
    m_q, sign, p, target = args
    shape = factor_shape(m_q, sign, p)
    return p, PrimeEvidence(shape, degree_combination_exists(shape, target))


def eliminate_mq(
    g: int,
    m_q: int,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    jobs: int = 1,
) -> EliminationCertificate:
    """Try every route in order; return the certificate of the first route
    that eliminates, else a non-eliminating certificate with notes."""
    if prime_bound < 3:
        raise ValueError("prime_bound must be >= 3")
    target = 2 * g
    notes: list[str] = []
    fallback: EliminationCertificate | None = None

    for route in routes_for(m_q):
        if route.kind == "universal-odd-qnr" and not route.window_ok:
            notes.append(
                f"universal-odd-qnr unavailable: window exponent {route.window_exponent} "
                f"exceeds 4*sqrt(e) = {BURGESS_WINDOW:.4f}"
            )
            continue
        if route.kind == "explicit-prime":
            ps = [route.prime]
        else:
            ps = odd_primes_up_to(prime_bound)
        work = [(m_q, route.sign, p, target) for p in ps]
        if jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                evaluated = list(
                    pool.map(_evaluate_prime, work, chunksize=max(1, len(work) // (4 * jobs)))
                )
        else:
            evaluated = [_evaluate_prime(w) for w in work]
        evaluated.sort(key=lambda pe: pe[0])

        route_notes = list(notes)
        if route.kind == "universal-odd-qnr":
            route_notes.extend(_stability_notes(evaluated))
        eliminated = all(not ev.combination_exists for _, ev in evaluated)
        if eliminated:
            route_notes.append(_route_label(route) + f": no assembly reaches degree {target}")
        else:
            wit_p, wit_ev = next(
                (p, ev) for p, ev in evaluated if ev.combination_exists
            )
            witness = find_degree_combination(wit_ev.factor_shape, target)
            expr = "+".join(
                "+".join([str(deg)] * mult) for deg, _, mult in witness
            )
            route_notes.append(
                _route_label(route)
                + f": assembly exists at p={wit_p} ({expr} = {target})"
            )
        cert = EliminationCertificate(
            g=g,
            m_q=m_q,
            route=route,
            tested_primes=tuple(p for p, _ in evaluated),
            per_prime=tuple(evaluated),
            eliminated=eliminated,
            notes="; ".join(route_notes),
        )
        if eliminated:
            return cert
        fallback = cert
        notes.append(route_notes[-1])

    if fallback is not None:
        return fallback
    # no applicable route at all
    universal = routes_for(m_q)[-1]
    notes.append("no applicable route; case left open")
    return EliminationCertificate(
        g=g,
        m_q=m_q,
        route=universal,
        tested_primes=(),
        per_prime=(),
        eliminated=False,
        notes="; ".join(notes),
    )


def _route_label(route: Route) -> str:
    if route.kind == "explicit-prime":
        return f"explicit-prime p={route.prime} (sign {route.sign:+d})"
    return "universal-odd-qnr"


def _stability_notes(evaluated: list[tuple[int, PrimeEvidence]]) -> list[str]:
    """Surface any factor-shape deviation across the tested odd primes."""
    ref = None
    for p, ev in evaluated:
        if p >= 5:
            ref = ev.factor_shape
            break
    if ref is None:
        return []
    out = []
    for p, ev in evaluated:
        if ev.factor_shape != ref:
            out.append(f"factor shape at p={p} deviates: {ev.factor_shape} vs {ref}")
    return out
