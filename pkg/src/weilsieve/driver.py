"""Pipeline orchestration and report construction.

analyze(g) runs enumeration -> congruence sieve -> binomial obstruction per
surviving order and assembles an auditable report.  Reports are plain data:
byte-identical across runs and across parallelism settings for a fixed
configuration.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import __version__
from .decomp import MAX_G, CapacityError, Decomposition, enumerate_decompositions
from .ntheory import ResidueClass, _least_odd_qnr
from .primes import primes_in
from .sieve import SurvivorCase, survivors
from .weilgate import DEFAULT_PRIME_BOUND, EliminationCertificate, eliminate_mq

VERDICT_EMPTY = "EMPTY"
VERDICT_OPEN = "OPEN"

# every conclusion is a statement about residue classes of the prime ell:
# a witness class contains infinitely many primes (Dirichlet), and the
# eliminations hold for all sufficiently large primes in the class
INTERPRETATION = (
    "witness classes denote infinitely many primes (Dirichlet); verdicts hold "
    "for all sufficiently large primes ell in the stated classes"
)

QNR_SCAN_MAX = 10_000_000


@dataclass(frozen=True)
class Config:
    restrict_e: int | None = None
    prime_bound: int = DEFAULT_PRIME_BOUND
    jobs: int = 1
    max_g: int = MAX_G


@dataclass(frozen=True)
class AnalysisReport:
    g: int
    verdict: str
    config: Config
    decompositions: tuple[Decomposition, ...]
    survivor_cases: tuple[SurvivorCase, ...]
    certificates: tuple[EliminationCertificate, ...]
    open_cases: tuple[tuple[int, int, int], ...]  # (survivor idx, m_q, cert idx)
    tool_version: str = __version__

    def __post_init__(self) -> None:
        if (self.verdict == VERDICT_EMPTY) != (len(self.open_cases) == 0):
            raise ValueError("verdict EMPTY iff there are no open cases")


def analyze(g: int, config: Config | None = None) -> AnalysisReport:
    """Full pipeline for one g; deterministic for a fixed configuration."""
    config = config or Config()
    if not 1 <= g <= config.max_g:
        raise CapacityError(f"g must be in [1, {config.max_g}]")
    decs = enumerate_decompositions(g, apply_filters=True)
    if config.restrict_e is not None:
        decs = [d for d in decs if config.restrict_e % d.e == 0]
    cases = survivors(g, decompositions=decs)
    m_values = sorted({c.m_q for c in cases})
    certs = tuple(
        eliminate_mq(g, m, prime_bound=config.prime_bound, jobs=config.jobs)
        for m in m_values
    )
    cert_index = {c.m_q: i for i, c in enumerate(certs)}
    open_cases = tuple(
        (i, case.m_q, cert_index[case.m_q])
        for i, case in enumerate(cases)
        if not certs[cert_index[case.m_q]].eliminated
    )
    return AnalysisReport(
        g=g,
        verdict=VERDICT_EMPTY if not open_cases else VERDICT_OPEN,
        config=config,
        decompositions=tuple(decs),
        survivor_cases=tuple(cases),
        certificates=certs,
        open_cases=open_cases,
    )


def surviving_orders(
    g: int, config: Config | None = None, post_weilgate: bool = False
) -> list[int]:
    """Distinct surviving m_q values, optionally after the binomial gate."""
    config = config or Config()
    if post_weilgate:
        report = analyze(g, config)
        return sorted({m for _, m, _ in report.open_cases})
    if not 1 <= g <= config.max_g:
        raise CapacityError(f"g must be in [1, {config.max_g}]")
    decs = enumerate_decompositions(g, apply_filters=True)
    if config.restrict_e is not None:
        decs = [d for d in decs if config.restrict_e % d.e == 0]
    return sorted({c.m_q for c in survivors(g, decompositions=decs)})


# ---------------------------------------------------------------------------
# nonresidue scanning
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QnrScanSummary:
    lo: int
    hi: int
    prime_count: int
    max_value: int
    argmax: int
    max_exponent: float  # max over ell of log(n_ell) / log(ell)
    exponent_argmax: int


def qnr_scan(lo: int, hi: int) -> QnrScanSummary:
    """Least odd quadratic nonresidue over every prime in [lo, hi]."""
    if not (5 <= lo <= hi <= QNR_SCAN_MAX):
        raise ValueError(f"range must satisfy 5 <= lo <= hi <= {QNR_SCAN_MAX}")
    best_val, best_ell = 0, 0
    best_exp, best_exp_ell = -1.0, 0
    count = 0
    for ell in primes_in(lo, hi):
        n = _least_odd_qnr(ell)
        count += 1
        if n > best_val:
            best_val, best_ell = n, ell
        exp = math.log(n) / math.log(ell)
        if exp > best_exp:
            best_exp, best_exp_ell = exp, ell
    return QnrScanSummary(
        lo=lo,
        hi=hi,
        prime_count=count,
        max_value=best_val,
        argmax=best_ell,
        max_exponent=best_exp,
        exponent_argmax=best_exp_ell,
    )


# ---------------------------------------------------------------------------
# serialization (field names frozen; documented in the README)
# ---------------------------------------------------------------------------


def _dec_dict(dec: Decomposition) -> dict:
    return {
        "parts": {str(d): n for d, n in dec.parts},
        "e": dec.e,
        "sum": dec.sum_expression(),
    }


def _witness_dict(rc: ResidueClass) -> dict:
    return {"residue": rc.residue, "modulus": rc.modulus}


def _survivor_dict(case: SurvivorCase, dec_index: dict) -> dict:
    return {
        "decomposition_index": dec_index[case.decomposition],
        "m_q": case.m_q,
        "witness": _witness_dict(case.witness),
        "system": {
            "required": sorted(case.system.required),
            "forbidden": sorted(case.system.forbidden),
            "two_adic_valuation": case.system.two_adic_valuation,
        },
    }


def _certificate_dict(cert: EliminationCertificate) -> dict:
    return {
        "m_q": cert.m_q,
        "route": {
            "kind": cert.route.kind,
            "sign": cert.route.sign,
            "prime": cert.route.prime,
            "window_exponent": cert.route.window_exponent,
            "window_ok": cert.route.window_ok,
        },
        "tested_primes": list(cert.tested_primes),
        "per_prime": {
            str(p): {
                "factors": [[deg, real] for deg, real in ev.factor_shape],
                "combination_exists": ev.combination_exists,
            }
            for p, ev in cert.per_prime
        },
        "eliminated": cert.eliminated,
        "notes": cert.notes,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    dec_index = {dec: i for i, dec in enumerate(report.decompositions)}
    return {
        "g": report.g,
        "verdict": report.verdict,
        "tool_version": report.tool_version,
        "config": {
            "restrict_e": report.config.restrict_e,
            "prime_bound": report.config.prime_bound,
            "max_g": report.config.max_g,
        },
        "interpretation": INTERPRETATION,
        "decompositions": [_dec_dict(d) for d in report.decompositions],
        "survivors": [_survivor_dict(c, dec_index) for c in report.survivor_cases],
        "certificates": [_certificate_dict(c) for c in report.certificates],
        "open_cases": [
            {"survivor_index": i, "m_q": m, "certificate_index": ci}
            for i, m, ci in report.open_cases
        ],
    }


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False)


def report_to_text(report: AnalysisReport) -> str:
    lines = [
        f"analysis for g = {report.g} (tool {report.tool_version})",
        f"config: restrict_e={report.config.restrict_e} prime_bound={report.config.prime_bound}",
        f"note: {INTERPRETATION}",
        "",
        f"filtered decompositions ({len(report.decompositions)}):",
    ]
    for dec in report.decompositions:
        lines.append(f"  {dec.sum_expression()}  e={dec.e}")
    lines.append("")
    lines.append(f"surviving cases after the congruence sieve ({len(report.survivor_cases)}):")
    for case in report.survivor_cases:
        lines.append(
            f"  {case.decomposition.sum_expression()}  m_q={case.m_q}  "
            f"ell ≡ {case.witness}"
        )
    lines.append("")
    lines.append(f"elimination certificates ({len(report.certificates)}):")
    for cert in report.certificates:
        status = "eliminated" if cert.eliminated else "open"
        route = cert.route.kind
        if cert.route.prime is not None:
            route += f" p={cert.route.prime}"
        lines.append(f"  m_q={cert.m_q}: {status} via {route} [{cert.notes}]")
    lines.append("")
    if report.open_cases:
        lines.append(f"open cases ({len(report.open_cases)}):")
        for i, m, _ in report.open_cases:
            case = report.survivor_cases[i]
            lines.append(
                f"  {case.decomposition.sum_expression()}  m_q={m}  ell ≡ {case.witness}"
            )
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines)


def qnr_summary_to_text(s: QnrScanSummary) -> str:
    return "\n".join(
        [
            f"scanned {s.prime_count} primes in [{s.lo}, {s.hi}]",
            f"max least-odd-nonresidue: {s.max_value} at ell = {s.argmax}",
            f"max exponent log(n)/log(ell): {s.max_exponent:.10f} at ell = {s.exponent_argmax}",
        ]
    )
