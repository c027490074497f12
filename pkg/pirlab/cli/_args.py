import argparse
from typing import Callable, NoReturn, Sequence

from pirlab.config import env
from pirlab.config.field_validators import RangeValidator
from pirlab.exceptions import CLIError


class _Parser(argparse.ArgumentParser):
    "Reports usage errors as :class:`CLIError` so the caller picks the exit status."

    def error(self, message: str) -> NoReturn:
        raise CLIError(f"{self.prog}: {message}")


def _parse_int_factory(arg_name: str, validator: RangeValidator[int]) -> Callable[[str], int]:
    def _parse_int(value: str) -> int:
        try:
            int_value = env.to_int(value)
        except (TypeError, ValueError):
            raise argparse.ArgumentTypeError("Value must be an integer") from None

        try:
            return validator(arg_name, int_value)  # type: ignore[return-value]
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc

    return _parse_int


def _parse_servers(value: str) -> list[int]:
    try:
        servers = [int(part) for part in value.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated server indices, got {value!r}") from None

    if any(j < 1 for j in servers):
        raise argparse.ArgumentTypeError("server indices start at 1")

    return servers


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    positive = _parse_int_factory("value", RangeValidator(min_value=1))
    seed = _parse_int_factory("seed", RangeValidator(min_value=0, max_value=2**64 - 1))

    parser = _Parser(prog="pirlab", description="Build, verify and simulate linear private information retrieval schemes.")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--log", dest="logging", action="store_true", help="Enable logging to stderr")
    group.add_argument("--no-log", dest="logging", action="store_false", help="Disable logging")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Set the logging level (default: PIR_LOG_LEVEL or WARNING)",
    )
    parser.set_defaults(logging=True)
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen-reference", help="Write the capacity-achieving reference scheme")
    gen.add_argument("--servers", type=positive, required=True, help="Server count S (prime; also the field size)")
    gen.add_argument("--messages", type=positive, required=True, help="Message count M")
    gen.add_argument("--out", default=None, help="Output path (default: stdout)")

    verify = commands.add_parser("verify", help="Check correctness, privacy and capacity of a scheme file")
    verify.add_argument("path", help="Scheme file")
    verify.add_argument(
        "--collusion",
        type=positive,
        nargs="+",
        action="extend",
        default=[],
        help="Collusion sizes T for the colluding checks",
    )
    verify.add_argument("--crosscheck", action="store_true", help="Compare enumerated entropies with query ranks")
    verify.add_argument("--budget", type=positive, default=None, help="Enumeration budget (default: PIR_BUDGET)")

    retrieve = commands.add_parser("retrieve", help="Simulate one seeded retrieval")
    retrieve.add_argument("path", help="Scheme file")
    retrieve.add_argument("--index", type=positive, required=True, help="1-based message index m")
    retrieve.add_argument("--seed", type=seed, required=True, help="64-bit generator seed")

    adversary = commands.add_parser("adversary", help="Posterior of colluding servers after one seeded retrieval")
    adversary.add_argument("path", help="Scheme file")
    adversary.add_argument("--collude", type=_parse_servers, required=True, help="Comma-separated servers, e.g. 1,2")
    adversary.add_argument("--seed", type=seed, required=True, help="64-bit generator seed")

    capacity = commands.add_parser("capacity", help="Print the PIR capacity")
    capacity.add_argument("--servers", type=positive, required=True, help="Server count S")
    capacity.add_argument("--messages", type=positive, required=True, help="Message count M")
    capacity.add_argument("--collusion", type=positive, default=1, help="Collusion size T (default: 1)")

    return parser.parse_args(args=argv)
