"""
SplitMix64, the seeded generator behind every simulated retrieval.

One step adds the golden-ratio increment to the 64-bit state and mixes the result:

.. code-block:: text

    state = state + 0x9E3779B97F4A7C15        (mod 2^64)
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

Bounded draws reject outputs at or above the largest multiple of the bound.
"""

from dataclasses import dataclass

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


@dataclass(slots=True)
class SplitMix64:
    state: int

    def __post_init__(self):
        self.state &= MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        "Uniform integer in ``[0, bound)``."
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")

        limit = (1 << 64) - (1 << 64) % bound
        while (value := self.next_u64()) >= limit:
            pass

        return value % bound
