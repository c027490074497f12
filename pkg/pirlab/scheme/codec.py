"""
Line-oriented text format for scheme tables.

::

    pir-scheme v1
    field <p>
    servers <S>
    messages <M>
    sublength <Lw>
    rows <rho_1> ... <rho_S>
    keys <K>
    realization <m> <f>
    <sum(rho_j) lines of M*Lw integers in [0, p)>
    ...

Realization blocks appear m-major then f-major. Blank lines are ignored; anything
else that does not match the layout is a :class:`SchemeFormatError`.
"""

import logging
from pathlib import Path
from typing import Iterator

from pirlab.exceptions import FieldException, SchemeException, SchemeFormatError
from pirlab.field import FieldSpec
from pirlab.matrix import FpMatrix

from .model import SchemeParams, SchemeTable

logger = logging.getLogger(__name__)

MAGIC = "pir-scheme v1"
HEADER = ("field", "servers", "messages", "sublength", "rows", "keys")


class _Lines:
    def __init__(self, text: str):
        self._lines: Iterator[tuple[int, str]] = (
            (number, line.strip()) for number, line in enumerate(text.splitlines(), start=1) if line.strip()
        )
        self.number = 0

    def next(self, expected: str) -> str:
        try:
            self.number, line = next(self._lines)
        except StopIteration:
            raise SchemeFormatError(self.number + 1, f"unexpected end of file, expected {expected}") from None

        return line

    def done(self) -> bool:
        try:
            self.number, line = next(self._lines)
        except StopIteration:
            return True

        raise SchemeFormatError(self.number, f"unexpected trailing content: {line!r}")

    def ints(self, tokens: list[str]) -> list[int]:
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise SchemeFormatError(self.number, f"expected integers, got {' '.join(tokens)!r}") from None


def _directive(lines: _Lines, name: str, count: int = 1) -> list[int]:
    tokens = lines.next(f"'{name}'").split()
    if tokens[0] != name:
        raise SchemeFormatError(lines.number, f"expected directive '{name}', got {tokens[0]!r}")

    values = lines.ints(tokens[1:])
    if len(values) != count:
        expected = "exactly one value" if count == 1 else f"{count} values, one per server"
        raise SchemeFormatError(lines.number, f"'{name}' takes {expected}, got {len(values)}")

    return values


def parse_scheme(text: str) -> SchemeTable:
    "Parse a scheme file, validating every count against the header."
    lines = _Lines(text)
    if (magic := lines.next("the format line")) != MAGIC:
        raise SchemeFormatError(lines.number, f"expected {MAGIC!r}, got {magic!r}")

    header = {name: _directive(lines, name) for name in HEADER[:4]}
    header["rows"] = _directive(lines, "rows", count=header["servers"][0])
    header["keys"] = _directive(lines, "keys")
    header_end = lines.number
    try:
        params = SchemeParams(
            field=FieldSpec(header["field"][0]),
            servers=header["servers"][0],
            messages=header["messages"][0],
            sub_length=header["sublength"][0],
            rows_per_server=tuple(header["rows"]),
        )
    except (FieldException, SchemeException) as exc:
        raise SchemeFormatError(header_end, str(exc)) from exc

    key_count = header["keys"][0]
    if key_count < 1:
        raise SchemeFormatError(header_end, f"key count must be >= 1, got {key_count}")

    p = params.field.modulus
    queries: dict[tuple[int, int], FpMatrix] = {}
    for m in range(1, params.messages + 1):
        for f in range(key_count):
            tokens = lines.next(f"'realization {m} {f}'").split()
            if tokens[0] != "realization" or lines.ints(tokens[1:]) != [m, f]:
                raise SchemeFormatError(lines.number, f"expected 'realization {m} {f}', got {' '.join(tokens)!r}")

            rows: list[list[int]] = []
            for _ in range(params.total_rows):
                row = lines.ints(lines.next("a query row").split())
                if len(row) != params.width:
                    raise SchemeFormatError(lines.number, f"expected {params.width} entries, got {len(row)}")
                if any(not 0 <= v < p for v in row):
                    raise SchemeFormatError(lines.number, f"entries must lie in [0, {p})")
                rows.append(row)

            queries[(m, f)] = FpMatrix.from_rows(params.field, rows, cols=params.width)

    lines.done()
    try:
        table = SchemeTable(params, key_count, queries)
    except SchemeException as exc:
        raise SchemeFormatError(lines.number, str(exc)) from exc

    logger.debug("Parsed scheme: %s keys=%d", params.describe(), key_count)
    return table


def serialize_scheme(table: SchemeTable) -> str:
    params = table.params
    out = [
        MAGIC,
        f"field {params.field.modulus}",
        f"servers {params.servers}",
        f"messages {params.messages}",
        f"sublength {params.sub_length}",
        "rows " + " ".join(str(count) for count in params.rows_per_server),
        f"keys {table.key_count}",
    ]
    for m, f, query in table.realizations():
        out.append(f"realization {m} {f}")
        out.extend(" ".join(str(v) for v in row) for row in query.to_rows())

    return "\n".join(out) + "\n"


def load_scheme(path: str | Path) -> SchemeTable:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise SchemeFormatError(line, f"invalid UTF-8 at byte {exc.start}") from exc

    return parse_scheme(text)


def dump_scheme(table: SchemeTable, path: str | Path):
    Path(path).write_text(serialize_scheme(table), encoding="utf-8", newline="\n")
    logger.info("Wrote %d realizations to %s", table.params.messages * table.key_count, path)
