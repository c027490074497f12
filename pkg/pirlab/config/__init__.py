from .loader import load_config
from .models import Config, EnumerationConfig, LoggingConfig, VerifierConfig

__all__ = ("Config", "EnumerationConfig", "LoggingConfig", "VerifierConfig", "load_config")
