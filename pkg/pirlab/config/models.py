import logging
from dataclasses import dataclass

from .field_validators import ChoicesValidator, RangeValidator
from .model_validator import field, validate

_LOG_LEVELS = [logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL]


@dataclass(slots=True, frozen=True)
@validate
class EnumerationConfig:
    """
    Limits for exhaustive enumeration.

    Args:
        budget (int): Maximum ``|keys| * p^(M*Lw)`` cells an entropy oracle may enumerate.
        reference_budget (int): Maximum number of keys ``p^(M-1) * S!`` when building the reference scheme.
        subset_limit (int): Largest message count ``M`` for which the ``2^(M-1)`` subset conditions are checked.
    """

    budget: int = field(default=10**8, validator=RangeValidator(min_value=1))
    reference_budget: int = field(default=10**6, validator=RangeValidator(min_value=1))
    subset_limit: int = field(default=20, validator=RangeValidator(min_value=1))


@dataclass(slots=True, frozen=True)
@validate
class VerifierConfig:
    """
    Scheduling of report sections.

    Args:
        concurrency (int): Maximum number of sections computed at the same time.
        pending (int): Number of sections allowed to wait for a free slot.
        close_timeout (float | None): Timeout for closing the section scheduler in seconds.
    """

    concurrency: int = field(default=4, validator=RangeValidator(min_value=1))
    pending: int = field(default=16, validator=RangeValidator(min_value=1))
    close_timeout: float | None = field(default=0.1, validator=RangeValidator(min_value=0.01))


@dataclass(slots=True, frozen=True)
@validate
class LoggingConfig:
    """
    Args:
        level (int): Default log level used by the CLI when ``--log-level`` is not given.
    """

    level: int = field(default=logging.WARNING, validator=ChoicesValidator(_LOG_LEVELS))


@dataclass(slots=True, frozen=True)
@validate
class Config:
    "Main configuration class that combines all configuration components."

    enumeration: EnumerationConfig = EnumerationConfig()
    verifier: VerifierConfig = VerifierConfig()
    logging: LoggingConfig = LoggingConfig()
