import logging
import sys
from typing import Sequence

from pirlab.config import load_config
from pirlab.exceptions import (
    BudgetExceeded,
    CLIError,
    ConfigValidationError,
    CorrectnessUnavailable,
    InvalidCollusion,
    InvalidParameters,
    ModulusOutOfRange,
    NotPrime,
    SchemeFormatError,
)

from ._args import parse_args
from ._commands import (
    COMMANDS,
    EXIT_BUDGET_EXCEEDED,
    EXIT_CORRECTNESS_UNAVAILABLE,
    EXIT_NOT_PRIME,
    EXIT_PARSE_ERROR,
    EXIT_USAGE,
)

logger = logging.getLogger("pirlab.cli")


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"pirlab: {message}\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = parse_args(argv)
    except CLIError as exc:
        return _fail(EXIT_USAGE, str(exc))

    try:
        config = load_config()
    except ConfigValidationError as exc:
        return _fail(EXIT_USAGE, f"invalid configuration: {exc}")

    if args.logging:
        level = args.log_level or logging.getLevelName(config.logging.level)
        logging.basicConfig(level=level, stream=sys.stderr)
        logger.info("Logging enabled at level: %s", level)

    try:
        return COMMANDS[args.command](args)
    except NotPrime as exc:
        return _fail(EXIT_NOT_PRIME, str(exc))
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET_EXCEEDED, str(exc))
    except SchemeFormatError as exc:
        return _fail(EXIT_PARSE_ERROR, f"{getattr(args, 'path', '<scheme>')}: {exc}")
    except OSError as exc:
        return _fail(EXIT_PARSE_ERROR, f"cannot read scheme file: {exc}")
    except CorrectnessUnavailable as exc:
        return _fail(EXIT_CORRECTNESS_UNAVAILABLE, str(exc))
    except (CLIError, InvalidParameters, InvalidCollusion, ModulusOutOfRange) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except KeyboardInterrupt:
        logger.info("Interrupted, shutting down...")
        return 130


if __name__ == "__main__":
    raise SystemExit(main())
