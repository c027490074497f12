import argparse
import asyncio
import logging
import sys

from pirlab._helpers.text import format_decimal
from pirlab.exceptions import CLIError
from pirlab.reference import build_reference_table
from pirlab.scheme import SchemeTable, capacity_formula, dump_scheme, load_scheme, serialize_scheme
from pirlab.simulation import simulate_adversary, simulate_retrieval
from pirlab.verifier import full_report, render_report

logger = logging.getLogger("pirlab.cli")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_NOT_PRIME = 2
EXIT_BUDGET_EXCEEDED = 3
EXIT_PARSE_ERROR = 4
EXIT_CORRECTNESS_UNAVAILABLE = 5
EXIT_USAGE = 64


def _load(path: str) -> SchemeTable:
    logger.debug("Loading scheme file: %s", path)
    return load_scheme(path)


def gen_reference(args: argparse.Namespace) -> int:
    table = build_reference_table(args.servers, args.messages)
    if args.out is None:
        sys.stdout.write(serialize_scheme(table))
    else:
        dump_scheme(table, args.out)

    return EXIT_OK


def verify(args: argparse.Namespace) -> int:
    table = _load(args.path)
    if invalid := [t for t in args.collusion if t > table.params.servers]:
        raise CLIError(f"collusion sizes {invalid} exceed the {table.params.servers} servers")

    report = asyncio.run(full_report(table, args.collusion, crosscheck=args.crosscheck, budget=args.budget))
    sys.stdout.write(render_report(report))
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def retrieve(args: argparse.Namespace) -> int:
    table = _load(args.path)
    if args.index > table.params.messages:
        raise CLIError(f"--index {args.index} is outside [1:{table.params.messages}]")

    sys.stdout.write(simulate_retrieval(table, args.index, args.seed).render())
    return EXIT_OK


def adversary(args: argparse.Namespace) -> int:
    table = _load(args.path)
    if any(j > table.params.servers for j in args.collude):
        raise CLIError(f"--collude servers must lie in [1:{table.params.servers}]")

    sys.stdout.write(simulate_adversary(table, args.collude, args.seed).render())
    return EXIT_OK


def capacity(args: argparse.Namespace) -> int:
    value = capacity_formula(args.servers, args.messages, args.collusion)
    sys.stdout.write(f"{value} ≈ {format_decimal(value)}\n")
    return EXIT_OK


COMMANDS = {
    "gen-reference": gen_reference,
    "verify": verify,
    "retrieve": retrieve,
    "adversary": adversary,
    "capacity": capacity,
}
