from itertools import combinations
from typing import Iterator, Sequence


def subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    "Every subset of ``items``, by size and then lexicographically, the empty set first."
    for size in range(len(items) + 1):
        yield from combinations(items, size)
