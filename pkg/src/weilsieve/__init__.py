"""weilsieve: exact-arithmetic case elimination for constrained Frobenius data.

The engine enumerates totient decompositions 2g = sum n_d*phi(d), sieves the
congruence conditions they force on a large prime ell, and applies binomial
factorization obstructions at small primes of known quadratic symbol.  Every
verdict is backed by machine-checkable witnesses and certificates.
"""

__version__ = "0.1.0"

from .intpoly import (
    DegreeCapacityError,
    ExactDivisionError,
    Factorization,
    IntPoly,
    binomial,
    factor_rational,
    irreducible_binomial_criterion,
    poly_mul,
    real_root_count,
)
from .ntheory import (
    UNSAT,
    CongruenceSystem,
    ResidueClass,
    class_satisfies,
    cyclotomic_poly,
    forced_legendre,
    least_odd_qnr,
    legendre_symbol,
    make_congruence_system,
    solve_congruence_system,
    totient,
    two_adic_valuation,
)
from .decomp import CapacityError, Decomposition, admissible_d, enumerate_decompositions
from .sieve import MqOutcome, SurvivorCase, mq_candidates, survivors
from .weilgate import (
    BURGESS_WINDOW,
    EliminationCertificate,
    PrimeEvidence,
    Route,
    degree_combination_exists,
    eliminate_mq,
    find_degree_combination,
    routes_for,
    trace_binomial,
)
from .driver import (
    AnalysisReport,
    Config,
    QnrScanSummary,
    analyze,
    qnr_scan,
    report_to_dict,
    report_to_json,
    report_to_text,
    surviving_orders,
)

__all__ = [
    "__version__",
    "AnalysisReport",
    "BURGESS_WINDOW",
    "CapacityError",
    "Config",
    "CongruenceSystem",
    "Decomposition",
    "DegreeCapacityError",
    "EliminationCertificate",
    "ExactDivisionError",
    "Factorization",
    "IntPoly",
    "MqOutcome",
    "PrimeEvidence",
    "QnrScanSummary",
    "ResidueClass",
    "Route",
    "SurvivorCase",
    "UNSAT",
    "admissible_d",
    "analyze",
    "binomial",
    "class_satisfies",
    "cyclotomic_poly",
    "degree_combination_exists",
    "eliminate_mq",
    "enumerate_decompositions",
    "factor_rational",
    "find_degree_combination",
    "forced_legendre",
    "irreducible_binomial_criterion",
    "least_odd_qnr",
    "legendre_symbol",
    "make_congruence_system",
    "mq_candidates",
    "poly_mul",
    "qnr_scan",
    "real_root_count",
    "report_to_dict",
    "report_to_json",
    "report_to_text",
    "routes_for",
    "solve_congruence_system",
    "survivors",
    "surviving_orders",
    "totient",
    "trace_binomial",
    "two_adic_valuation",
]
