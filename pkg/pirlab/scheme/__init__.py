from .codec import dump_scheme, load_scheme, parse_scheme, serialize_scheme
from .entropy import conditional_entropy, message_space, realization_entropy
from .model import MessageVector, ResponseVector, SchemeParams, SchemeTable
from .protocol import query_blocks, respond, retrieve, selector_matrix
from .rate import RateResult, capacity_formula, download_entropy, rate_exact

__all__ = (
    "MessageVector",
    "RateResult",
    "ResponseVector",
    "SchemeParams",
    "SchemeTable",
    "capacity_formula",
    "conditional_entropy",
    "download_entropy",
    "dump_scheme",
    "load_scheme",
    "message_space",
    "parse_scheme",
    "query_blocks",
    "rate_exact",
    "realization_entropy",
    "respond",
    "retrieve",
    "selector_matrix",
    "serialize_scheme",
)
