from .adversary import AdversaryView, simulate_adversary
from .prng import SplitMix64
from .trace import Decoded, QuerySent, ResponseReceived, SimulationTrace, TraceEvent, simulate_retrieval

__all__ = (
    "AdversaryView",
    "Decoded",
    "QuerySent",
    "ResponseReceived",
    "SimulationTrace",
    "SplitMix64",
    "TraceEvent",
    "simulate_adversary",
    "simulate_retrieval",
)
