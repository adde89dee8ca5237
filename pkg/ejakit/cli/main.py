"""
The eja command.

stdout carries exactly one JSON (or, for `config`, YAML) document; diagnostics go
to stderr. Exit codes: 0 on success, 1 on law or domain failures, 2 on usage
errors and malformed descriptors.
"""
import argparse
import os
import sys
from typing import List, Optional

import numpy as np
from loguru import logger
from pydantic_yaml import to_yaml_str

from ejakit.algebra import Algebra, benchmark_algebras
from ejakit.effectus import diamond_table, default_idempotent_samples, exchange, galois_mismatches, polar_decompose
from ejakit.env import get_settings, reset_settings
from ejakit.env.environment import ACTIVE_PROFILES_PROPERTY_NAME
from ejakit.exceptions import DescriptorException, EjaException
from ejakit.laws import ALL, SUITES, run_suite
from ejakit.logging import configure_logging
from ejakit.maps import from_matrix
from ejakit.serialization import (
    AlgebraDescriptor,
    ElementDescriptor,
    MapDescriptor,
    WitnessDescriptor,
    dumps,
    parse_algebra,
    parse_element,
    parse_map,
)
from ejakit.spectral import idempotent_lattice, is_diagonal, refine_atomic, spectral_decompose

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_SEED = 0
DEFAULT_TRIALS = 50


def _algebra_argument(args: argparse.Namespace) -> Optional[Algebra]:
    return parse_algebra(args.algebra) if args.algebra else None


def cmd_laws(args: argparse.Namespace) -> int:
    algebra = _algebra_argument(args)
    if algebra is not None:
        report = run_suite(algebra, args.suite, args.seed, args.trials, args.tol, args.workers)
        print(report.to_json())
        return EXIT_OK if report.passed else EXIT_FAILURE

    reports = [run_suite(a, args.suite, args.seed, args.trials, args.tol, args.workers) for a in benchmark_algebras()]
    passed = all(r.passed for r in reports)
    print(dumps({"pass": passed, "reports": [r.model_dump(by_alias=True) for r in reports]}))
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_spectral(args: argparse.Namespace) -> int:
    a = parse_element(args.element, _algebra_argument(args))
    d = spectral_decompose(a)
    if args.atomic:
        d = refine_atomic(d, args.seed)
    print(dumps({
        "algebra": AlgebraDescriptor.of(a.algebra),
        "atomic": d.atomic,
        "pairs": [{"eigenvalue": value, "idempotent": ElementDescriptor.of(p).coords} for value, p in d.pairs],
        "residuals": d.residuals(a),
    }))
    return EXIT_OK


def _pair(args: argparse.Namespace):
    algebra = _algebra_argument(args)
    p = parse_element(args.p, algebra)
    q = parse_element(args.q, algebra if algebra is not None else p.algebra)
    return p, q


def cmd_polar(args: argparse.Namespace) -> int:
    p, q = _pair(args)
    phi, claims = polar_decompose(p, q)
    tol = get_settings().tolerances.law if args.tol is None else args.tol
    passed = claims.max_residual <= tol
    print(dumps({"pass": passed, "claims": claims, "max_residual": claims.max_residual, "phi": MapDescriptor.of(phi)}))
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_exchange(args: argparse.Namespace) -> int:
    p, q = _pair(args)
    witness = exchange(p, q)
    print(dumps({"residual": witness.residual(), "witness": WitnessDescriptor.of(witness)}))
    return EXIT_OK


def cmd_diamond_table(args: argparse.Namespace) -> int:
    descriptor = parse_map(args.map)
    domain, codomain = descriptor.domain.to_algebra(), descriptor.codomain.to_algebra()
    if not domain.is_same(codomain):
        raise DescriptorException("map", "diamond tables need an endomap")
    rng = np.random.default_rng(args.seed)
    f = from_matrix(domain, codomain, np.array(descriptor.matrix), rng)
    if is_diagonal(domain):
        samples = idempotent_lattice(domain)
    else:
        samples = default_idempotent_samples(domain, rng, args.samples)
    rows = [
        {"p": ElementDescriptor.of(row.idempotent).coords,
         "upper": ElementDescriptor.of(row.upper).coords,
         "lower": ElementDescriptor.of(row.lower).coords}
        for row in diamond_table(f, samples)
    ]
    mismatches = galois_mismatches(f, samples)
    print(dumps({"algebra": AlgebraDescriptor.of(domain), "rows": rows, "galois_mismatches": len(mismatches)}))
    return EXIT_OK if not mismatches else EXIT_FAILURE


def cmd_config(args: argparse.Namespace) -> int:
    sys.stdout.write(to_yaml_str(get_settings()))
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", help='algebra descriptor, e.g. {"factors":[{"kind":"spin","d":4}]}')
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--tol", type=float, default=None, help="base law tolerance, eja.tolerances.law by default")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eja", description="Euclidean Jordan algebra toolkit.")
    parser.add_argument("--profile", help="comma-delimited config profiles (dev, test, prod)")
    parser.add_argument("--log-level", help="stderr log level, eja.logging.level by default")
    commands = parser.add_subparsers(dest="command", required=True)

    laws = commands.add_parser("laws", help="run a law suite and print its report")
    _add_common(laws)
    laws.add_argument("--suite", choices=SUITES + (ALL,), default=ALL)
    laws.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    laws.add_argument("--workers", type=int, default=1)
    laws.set_defaults(handler=cmd_laws)

    spectral = commands.add_parser("spectral", help="spectral decomposition of an element")
    _add_common(spectral)
    spectral.add_argument("--element", required=True)
    spectral.add_argument("--atomic", action="store_true", help="refine into atomic idempotents")
    spectral.set_defaults(handler=cmd_spectral)

    for name, handler, text in (("polar", cmd_polar, "polar decomposition of Q_q Q_p"),
                                ("exchange", cmd_exchange, "normal form of pi_p o xi_q")):
        command = commands.add_parser(name, help=text)
        _add_common(command)
        command.add_argument("--p", required=True)
        command.add_argument("--q", required=True)
        command.set_defaults(handler=handler)

    table = commands.add_parser("diamond-table", help="upper and lower diamond adjoints on idempotents")
    _add_common(table)
    table.add_argument("--map", required=True)
    table.add_argument("--samples", type=int, default=None, help="random ceilings added to the frame samples")
    table.set_defaults(handler=cmd_diamond_table)

    config = commands.add_parser("config", help="print the effective settings as YAML")
    config.set_defaults(handler=cmd_config)
    return parser


def _select_profile(profile: Optional[str]) -> None:
    if profile:
        os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = profile
        reset_settings()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        _select_profile(args.profile)
        configure_logging(level=args.log_level)
    except RuntimeError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.debug("eja {}", args.command)
    try:
        return args.handler(args)
    except DescriptorException as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except EjaException as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
