import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from pirlab.exceptions import InvalidParameters, KeyNotFound, NonInjectiveScheme, ShapeMismatch
from pirlab.field import FieldSpec
from pirlab.matrix import FpMatrix
from pirlab.types import Observation, Row

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class SchemeParams:
    """
    Shape of a linear PIR scheme.

    Args:
        field (FieldSpec): field of message symbols and query coefficients
        servers (int): server count S >= 2
        messages (int): message count M >= 2
        sub_length (int): sub-symbols per message Lw >= 1
        rows_per_server (tuple[int, ...]): answer symbols per server; defaults to one each
    """

    field: FieldSpec
    servers: int
    messages: int
    sub_length: int
    rows_per_server: tuple[int, ...] = ()

    def __post_init__(self):
        if self.servers < 2:
            raise InvalidParameters(f"at least 2 servers are required, got {self.servers}")
        if self.messages < 2:
            raise InvalidParameters(f"at least 2 messages are required, got {self.messages}")
        if self.sub_length < 1:
            raise InvalidParameters(f"sub-length must be >= 1, got {self.sub_length}")

        rows = tuple(self.rows_per_server) or (1,) * self.servers
        if len(rows) != self.servers:
            raise InvalidParameters(f"expected {self.servers} row counts, got {len(rows)}")
        if any(count < 1 for count in rows):
            raise InvalidParameters("every server must answer with at least one symbol")

        object.__setattr__(self, "rows_per_server", rows)

    @property
    def width(self) -> int:
        "Columns of every query matrix, ``M * Lw``."
        return self.messages * self.sub_length

    @property
    def total_rows(self) -> int:
        return sum(self.rows_per_server)

    def server_rows(self, server: int) -> range:
        "Zero-based rows of the stacked query owned by 1-based ``server``."
        if not 1 <= server <= self.servers:
            raise InvalidParameters(f"server {server} is outside [1:{self.servers}]")

        start = sum(self.rows_per_server[: server - 1])
        return range(start, start + self.rows_per_server[server - 1])

    def check_message_index(self, m: int):
        if not 1 <= m <= self.messages:
            raise InvalidParameters(f"message index {m} is outside [1:{self.messages}]")

    def describe(self) -> str:
        rows = ",".join(str(count) for count in self.rows_per_server)
        return (
            f"field={self.field.modulus} servers={self.servers} messages={self.messages} "
            f"sublength={self.sub_length} rows={rows}"
        )


@dataclass(slots=True, frozen=True)
class SchemeTable:
    """
    Every query realization of a linear PIR scheme.

    The key ``f`` is drawn uniformly from ``range(key_count)``; ``queries[(m, f)]`` is the
    stacked ``(sum rho_j) x (M * Lw)`` query matrix sent when the user wants ``W_m``.

    Args:
        params (SchemeParams): scheme shape
        key_count (int): number of keys K
        queries (Mapping[tuple[int, int], FpMatrix]): realization per (1-based m, 0-based f)
    """

    params: SchemeParams
    key_count: int
    queries: Mapping[tuple[int, int], FpMatrix]

    def __post_init__(self):
        if self.key_count < 1:
            raise InvalidParameters(f"at least one key is required, got {self.key_count}")

        expected_shape = (self.params.total_rows, self.params.width)
        queries: dict[tuple[int, int], FpMatrix] = {}
        for m in range(1, self.params.messages + 1):
            seen: dict[FpMatrix, int] = {}
            for f in range(self.key_count):
                try:
                    query = self.queries[(m, f)]
                except KeyError:
                    raise KeyNotFound(m, f) from None

                if query.field != self.params.field or query.shape != expected_shape:
                    raise ShapeMismatch(
                        f"realization (m={m}, f={f}) is {query.shape} over {query.field}, "
                        f"expected {expected_shape} over {self.params.field}",
                    )
                if (first := seen.setdefault(query, f)) != f:
                    raise NonInjectiveScheme(m, first, f)

                queries[(m, f)] = query

        if len(self.queries) != len(queries):
            extra = sorted(set(self.queries) - set(queries))
            raise InvalidParameters(f"unexpected realizations: {extra[:5]}")

        object.__setattr__(self, "queries", queries)
        logger.debug(
            "Scheme table ready: %s keys=%d realizations=%d",
            self.params.describe(),
            self.key_count,
            len(queries),
        )

    @property
    def field(self) -> FieldSpec:
        return self.params.field

    @property
    def keys(self) -> range:
        return range(self.key_count)

    @property
    def message_indices(self) -> range:
        return range(1, self.params.messages + 1)

    @property
    def server_indices(self) -> range:
        return range(1, self.params.servers + 1)

    def query(self, m: int, f: int) -> FpMatrix:
        try:
            return self.queries[(m, f)]
        except KeyError:
            raise KeyNotFound(m, f) from None

    def server_query(self, m: int, f: int, server: int) -> FpMatrix:
        "Rows of the realization sent to one 1-based server."
        return self.query(m, f).take_rows(self.params.server_rows(server))

    def servers_query(self, m: int, f: int, servers: Iterable[int]) -> FpMatrix:
        "Rows sent to several servers, stacked in the given order."
        rows = [row for server in servers for row in self.params.server_rows(server)]
        return self.query(m, f).take_rows(rows)

    def observation(self, m: int, f: int, servers: Sequence[int]) -> Observation:
        "Hashable view of what ``servers`` receive, one row tuple per server."
        return tuple(self.server_query(m, f, server).to_rows() for server in servers)

    def realizations(self) -> Iterator[tuple[int, int, FpMatrix]]:
        "All ``(m, f, query)`` triples, m-major then f-major."
        for m in self.message_indices:
            for f in self.keys:
                yield m, f, self.queries[(m, f)]

    def with_query(self, m: int, f: int, query: FpMatrix) -> "SchemeTable":
        "Copy of the table with one realization replaced."
        self.query(m, f)
        return SchemeTable(self.params, self.key_count, {**self.queries, (m, f): query})


@dataclass(slots=True, frozen=True)
class MessageVector:
    """
    The concatenated messages ``w_{1,1..Lw}, ..., w_{M,1..Lw}`` as a column.

    Args:
        params (SchemeParams): scheme shape
        symbols (FpMatrix): ``(M * Lw) x 1`` column
    """

    params: SchemeParams
    symbols: FpMatrix

    def __post_init__(self):
        if self.symbols.shape != (self.params.width, 1) or self.symbols.field != self.params.field:
            raise ShapeMismatch(f"message vector must be {self.params.width}x1 over {self.params.field}")

    @classmethod
    def from_symbols(cls, params: SchemeParams, values: Sequence[int]) -> "MessageVector":
        return cls(params, FpMatrix.from_rows(params.field, [[v] for v in values], cols=1))

    @classmethod
    def zeros(cls, params: SchemeParams) -> "MessageVector":
        return cls(params, FpMatrix.zeros(params.field, params.width, 1))

    def block(self, k: int) -> Row:
        "The Lw symbols of message ``W_k``."
        self.params.check_message_index(k)
        start = (k - 1) * self.params.sub_length
        return tuple(int(v) for v in self.symbols.data[start : start + self.params.sub_length, 0])

    def values(self) -> Row:
        return tuple(int(v) for v in self.symbols.data[:, 0])

    def __add__(self, other: "MessageVector") -> "MessageVector":
        return MessageVector(self.params, self.symbols + other.symbols)


@dataclass(slots=True, frozen=True)
class ResponseVector:
    """
    Answers ``X_1 .. X_S``, one tuple of symbols per server.

    Args:
        field (FieldSpec): field of the answer symbols
        servers (tuple[Row, ...]): answers in server order
    """

    field: FieldSpec
    servers: tuple[Row, ...]

    def server(self, j: int) -> Row:
        return self.servers[j - 1]

    def stacked(self) -> FpMatrix:
        "All answers as one column, in server order."
        values = [v for answer in self.servers for v in answer]
        return FpMatrix(self.field, np.array(values, dtype=np.int64).reshape(-1, 1))

    def __add__(self, other: "ResponseVector") -> "ResponseVector":
        p = self.field.modulus
        return ResponseVector(
            self.field,
            tuple(tuple((a + b) % p for a, b in zip(x, y, strict=True)) for x, y in zip(self.servers, other.servers, strict=True)),
        )
