"""Seeded counter-based random generator for reproducible sampling.

Verification reports and simulations must be reproducible across runs and
across implementations, so instead of a stateful Mersenne twister we use a
counter-based construction: draw i of stream (seed) is splitmix64 applied to
seed * PHI + i * PHI, where PHI is the 64-bit golden-ratio constant.  Any
implementation of splitmix64 reproduces the exact stream.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_PHI = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    x = (x + _PHI) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class CounterRng:
    """Deterministic stream of draws indexed by an internal counter."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self.counter = 0

    def next_u64(self) -> int:
        v = splitmix64((self.seed * _PHI + self.counter * _PHI) & _MASK)
        self.counter += 1
        return v

    def randbelow(self, n: int) -> int:
        """Uniform draw in [0, n) by rejection on the top 64-bit range."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def sample(self, population: int, k: int) -> list[int]:
        """k distinct indices from range(population), sorted."""
        if k > population:
            raise ValueError("sample larger than population")
        chosen: set[int] = set()
        # Floyd's algorithm: k draws regardless of population size.
        for j in range(population - k, population):
            t = self.randbelow(j + 1)
            chosen.add(t if t not in chosen else j)
        return sorted(chosen)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
