from . import env
from .models import Config, EnumerationConfig, LoggingConfig, VerifierConfig


def load_config() -> Config:
    """Load configuration from environment variables.

    Reads ``PIR_*`` environment variables. Defaults are used when env vars are not set.

    Returns:
        Config: Complete configuration object with all settings resolved.
    """
    default_config = Config()
    enumeration = default_config.enumeration
    verifier = default_config.verifier

    return Config(
        enumeration=EnumerationConfig(
            budget=env.parse_int("PIR_BUDGET", enumeration.budget),
            reference_budget=env.parse_int("PIR_REFERENCE_BUDGET", enumeration.reference_budget),
            subset_limit=env.parse_int("PIR_SUBSET_LIMIT", enumeration.subset_limit),
        ),
        verifier=VerifierConfig(
            concurrency=env.parse_int("PIR_VERIFIER_CONCURRENCY", verifier.concurrency),
            pending=env.parse_int("PIR_VERIFIER_PENDING", verifier.pending),
            close_timeout=env.parse("PIR_VERIFIER_CLOSE_TIMEOUT", verifier.close_timeout, cast=float),
        ),
        logging=LoggingConfig(level=env.parse_log_level("PIR_LOG_LEVEL", default_config.logging.level)),
    )
