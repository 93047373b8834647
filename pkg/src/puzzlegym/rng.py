"""Splittable deterministic PRNG.

The generator is SplitMix64, chosen because it is fully specified by a
handful of integer operations and therefore reproduces bit-for-bit on any
platform or language.  Child streams are derived by hashing a label into
the parent seed, so parallel generation never shares mutable state.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def _hash_label(label: str) -> int:
    # FNV-1a, 64 bit; stable across platforms.
    h = 0xCBF29CE484222325
    for byte in label.encode("utf-8"):
        h = (h ^ byte) * 0x100000001B3 & MASK64
    return h


class SeededRng:
    """SplitMix64 stream with labelled splitting."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return _mix(self._state)

    def split(self, label: str) -> "SeededRng":
        """Independent child stream; deterministic in (seed, label)."""
        return SeededRng(_mix(self._state ^ _hash_label(label)))

    # -- derived draws ----------------------------------------------------

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        # Rejection sampling to avoid modulo bias.
        limit = (MASK64 + 1) - (MASK64 + 1) % span
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + v % span

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randint(0, i)
            seq[i], seq[j] = seq[j], seq[i]

    def sample(self, seq, k: int) -> list:
        if k > len(seq):
            raise ValueError("sample larger than population")
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]

    def weighted_choice(self, items, weights):
        total = float(sum(weights))
        if total <= 0:
            raise ValueError("weights must have a positive sum")
        r = self.random() * total
        acc = 0.0
        for item, w in zip(items, weights):
            acc += w
            if r < acc:
                return item
        return items[-1]
