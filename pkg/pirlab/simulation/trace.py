import logging
from dataclasses import dataclass

from pirlab._helpers.text import format_row, format_rows
from pirlab.exceptions import DecodingMismatch
from pirlab.scheme import MessageVector, SchemeTable, respond, retrieve
from pirlab.types import Row
from pirlab.verifier import decoding_matrix

from .prng import SplitMix64

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class QuerySent:
    server: int
    rows: tuple[Row, ...]

    def render(self) -> str:
        return f"QuerySent[{self.server}]: {format_rows(self.rows)}"


@dataclass(slots=True, frozen=True)
class ResponseReceived:
    server: int
    symbols: Row

    def render(self) -> str:
        return f"ResponseReceived[{self.server}]: {format_row(self.symbols)}"


@dataclass(slots=True, frozen=True)
class Decoded:
    message_index: int
    block: Row

    def render(self) -> str:
        return f"Decoded: matches W_{self.message_index}"


TraceEvent = QuerySent | ResponseReceived | Decoded


@dataclass(slots=True, frozen=True)
class SimulationTrace:
    """
    One seeded retrieval: every query sent, every answer received and the decoded block.

    Args:
        seed (int): generator seed
        message_index (int): 1-based index the user retrieves
        key (int): key drawn for the query
        messages (MessageVector): message contents drawn for the servers
        events (tuple[TraceEvent, ...]): queries, then answers, then the decoded block
    """

    seed: int
    message_index: int
    key: int
    messages: MessageVector
    events: tuple[TraceEvent, ...]

    def render(self) -> str:
        lines = [
            f"seed: {self.seed}",
            f"m: {self.message_index}",
            f"f: {self.key}",
            f"messages: {format_row(self.messages.values())}",
            *(event.render() for event in self.events),
        ]
        return "\n".join(lines) + "\n"


def simulate_retrieval(table: SchemeTable, m: int, seed: int) -> SimulationTrace:
    """
    Draw a key, then every message symbol, from ``SplitMix64(seed)`` and run one retrieval.

    Raises:
        CorrectnessUnavailable: when the drawn realization has no decoding matrix
        DecodingMismatch: when the decoded block differs from ``W_m``
    """
    params = table.params
    params.check_message_index(m)

    rng = SplitMix64(seed)
    f = rng.randbelow(table.key_count)
    messages = MessageVector.from_symbols(params, [rng.randbelow(params.field.modulus) for _ in range(params.width)])
    logger.debug("Seed %d drew key %d for m=%d", seed, f, m)

    decoder = decoding_matrix(table, m, f)
    response = respond(table, m, f, messages)
    block = retrieve(table, m, f, messages, decoder)
    if block != messages.block(m):
        raise DecodingMismatch(f"decoded {block}, expected {messages.block(m)}")

    events: list[TraceEvent] = [QuerySent(j, table.server_query(m, f, j).to_rows()) for j in table.server_indices]
    events += [ResponseReceived(j, response.server(j)) for j in table.server_indices]
    events.append(Decoded(m, block))

    return SimulationTrace(seed=seed, message_index=m, key=f, messages=messages, events=tuple(events))
