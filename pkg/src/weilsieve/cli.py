"""Command-line interface.

Subcommands: analyze, survivors, mq, factor, qnr-scan.  Exit codes: 0 when a
run completes (verdict EMPTY for analyze), 10 when analyze completes with
verdict OPEN, 2 on invalid input.  An optional JSON config file supplies the
same keys as the flags; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomp import MAX_G, CapacityError
from .driver import (
    Config,
    analyze,
    qnr_scan,
    qnr_summary_to_text,
    report_to_json,
    report_to_text,
    surviving_orders,
    VERDICT_EMPTY,
)
from .intpoly import IntPoly, binomial, factor_rational
from .sieve import survivors

EXIT_EMPTY = 0
EXIT_OPEN = 10
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilsieve",
        description=(
            "exact-arithmetic case elimination: totient decompositions, "
            "congruence sieving, and binomial factorization obstructions"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, prime_bound=True):
        p.add_argument("--g", type=int, required=True, help=f"dimension, 1..{MAX_G}")
        if prime_bound:
            p.add_argument("--prime-bound", type=int, default=None)
        p.add_argument("--jobs", type=int, default=None, help="parallel workers")
        p.add_argument("--config", type=str, default=None, help="JSON config file")

    p_analyze = sub.add_parser("analyze", help="full pipeline for one g")
    add_common(p_analyze)
    p_analyze.add_argument("--restrict-e", type=int, default=None)
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")

    p_surv = sub.add_parser("survivors", help="cases surviving the congruence sieve")
    p_surv.add_argument("--g", type=int, required=True)

    p_mq = sub.add_parser("mq", help="surviving m_q values for one g")
    add_common(p_mq)
    p_mq.add_argument("--post-weilgate", action="store_true")

    p_factor = sub.add_parser("factor", help="factor a polynomial over Q")
    group = p_factor.add_mutually_exclusive_group(required=True)
    group.add_argument("--binomial", nargs=2, metavar=("N", "C"), help="T^N - C")
    group.add_argument("--coeffs", type=str, help="c0,c1,... lowest degree first")

    p_qnr = sub.add_parser("qnr-scan", help="least odd nonresidue over a prime range")
    p_qnr.add_argument("--min", type=int, required=True)
    p_qnr.add_argument("--max", type=int, required=True)

    return parser


def _load_config(args) -> Config:
    file_values = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            file_values = json.load(fh)

    def pick(flag_value, key, default):
        if flag_value is not None:
            return flag_value
        return file_values.get(key, default)

    base = Config()
    return Config(
        restrict_e=pick(getattr(args, "restrict_e", None), "restrict_e", base.restrict_e),
        prime_bound=pick(getattr(args, "prime_bound", None), "prime_bound", base.prime_bound),
        jobs=pick(getattr(args, "jobs", None), "jobs", base.jobs),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            config = _load_config(args)
            report = analyze(args.g, config)
            if args.format == "json":
                print(report_to_json(report))
            else:
                print(report_to_text(report))
            return EXIT_EMPTY if report.verdict == VERDICT_EMPTY else EXIT_OPEN

        if args.command == "survivors":
            for case in survivors(args.g):
                print(
                    f"{case.decomposition.sum_expression()}\t"
                    f"m_q={case.m_q}\t"
                    f"ell ≡ {case.witness}"
                )
            return EXIT_EMPTY

        if args.command == "mq":
            config = _load_config(args)
            values = surviving_orders(args.g, config, post_weilgate=args.post_weilgate)
            print(" ".join(str(v) for v in values))
            return EXIT_EMPTY

        if args.command == "factor":
            if args.binomial is not None:
                n, c = (int(v) for v in args.binomial)
                poly = binomial(n, c)
            else:
                coeffs = tuple(int(v) for v in args.coeffs.split(","))
                poly = IntPoly(coeffs)
                if poly.is_zero:
                    raise ValueError("cannot factor the zero polynomial")
            fac = factor_rational(poly)
            print(f"input: {poly}")
            print(f"unit: {fac.unit}")
            for i, (f, mult) in enumerate(fac.factors, start=1):
                print(
                    f"factor {i} (multiplicity {mult}): "
                    f"{list(f.coeffs)}  |  {f}"
                )
            return EXIT_EMPTY

        if args.command == "qnr-scan":
            print(qnr_summary_to_text(qnr_scan(args.min, args.max)))
            return EXIT_EMPTY

    except (CapacityError, ValueError) as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
    raise AssertionError("unreachable")


def entrypoint() -> None:
    sys.exit(main())
