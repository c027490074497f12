import os
from logging import getLevelNamesMapping
from typing import Any, Callable

from pirlab.exceptions import ConfigValidationError
from pirlab.types import NOTSET, NotSetType


def to_int(v: str) -> int:
    # accepts 10**8 style budgets written as 1e8 or with underscores
    normalized = v.strip().replace("_", "")
    if "e" in normalized.lower():
        mantissa, _, exponent = normalized.lower().partition("e")
        return int(mantissa) * 10 ** int(exponent)

    return int(normalized)


def to_log_level(v: str) -> int:
    return getLevelNamesMapping()[v.upper()]


def parse(key: str, default: Any = NOTSET, *, cast: Callable[[str], Any] = str) -> Any:
    raw = os.getenv(key)
    if raw is None:
        if default is NOTSET:
            raise ConfigValidationError(f"Missing required environment variable: {key}")

        return default

    try:
        return cast(raw)
    except Exception as e:
        raise ConfigValidationError(f"Failed to cast environment variable {key}: {raw!r}") from e


def parse_int(key: str, default: int | NotSetType = NOTSET) -> int:
    return parse(key, default, cast=to_int)


def parse_log_level(key: str, default: int | NotSetType = NOTSET) -> int:
    return parse(key, default, cast=to_log_level)
