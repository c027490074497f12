from typing import TypeAlias


class NotSetType:
    def __repr__(self) -> str:
        return "NOTSET"


NOTSET = NotSetType()

Row: TypeAlias = tuple[int, ...]
"One matrix row as plain residues."

Observation: TypeAlias = tuple[tuple[Row, ...], ...]
"Query rows seen by a set of servers, one tuple of rows per server."

__all__ = ("NOTSET", "NotSetType", "Observation", "Row")
