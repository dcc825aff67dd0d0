"""Deterministic random streams for reproducible dataset generation.

Two named primitives, both tiny enough to re-implement bit-exactly in any
language:

* **SplitMix64** (Steele/Lea/Flood finalizer, the canonical constants) is the
  seed-derivation function.  The i-th output of a SplitMix64 sequence seeded
  at ``s`` is ``mix64(s + (i+1)*GOLDEN)``, which gives O(1) random access —
  problem #i of a dataset gets its own child seed without stepping through
  i states.

* **Philox4x64-10** (Salmon et al., the counter-based generator from the
  Random123 suite) produces the per-problem stream from a derived 128-bit
  key.  Being counter-based it has no sequential hidden state beyond the
  block counter, so identical (seed, index) always reproduces an identical
  stream regardless of platform.

Everything downstream draws exclusively through :class:`Stream`, so the whole
pipeline's determinism reduces to these two functions, which are pinned by
known-answer tests.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1

GOLDEN = 0x9E3779B97F4A7C15

# Philox4x64 round multipliers and Weyl key increments (Random123 values).
_PHILOX_M0 = 0xD2E7470EE14C6C93
_PHILOX_M1 = 0xCA5A826395121157
_PHILOX_W0 = 0x9E3779B97F4A7C15
_PHILOX_W1 = 0xBB67AE8584CAA73B


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def splitmix64_at(seed: int, index: int) -> int:
    """The index-th output (0-based) of the SplitMix64 sequence seeded at seed."""
    if index < 0:
        raise ValueError("index must be nonnegative")
    return mix64((seed + (index + 1) * GOLDEN) & _MASK64)


def derive_key(seed: int, *path: int) -> int:
    """Derive a child seed by walking ``path`` through nested SplitMix64 sequences.

    ``derive_key(s, i)`` is problem i's seed under base seed s;
    ``derive_key(s, i, j)`` is sub-stream j of problem i (used e.g. for the
    few-shot prompt's worked examples).
    """
    key = seed & _MASK64
    for index in path:
        key = splitmix64_at(key, index)
    return key


def philox4x64(counter: tuple[int, int, int, int], key: tuple[int, int]) -> tuple[int, int, int, int]:
    """One Philox4x64-10 block: 4 output words for (counter, key)."""
    x0, x1, x2, x3 = counter
    k0, k1 = key
    for _ in range(10):
        p0 = _PHILOX_M0 * x0
        p1 = _PHILOX_M1 * x2
        x0, x1, x2, x3 = (
            ((p1 >> 64) ^ x1 ^ k0) & _MASK64,
            p1 & _MASK64,
            ((p0 >> 64) ^ x3 ^ k1) & _MASK64,
            p0 & _MASK64,
        )
        k0 = (k0 + _PHILOX_W0) & _MASK64
        k1 = (k1 + _PHILOX_W1) & _MASK64
    return x0, x1, x2, x3


class Stream:
    """A deterministic random stream backed by Philox4x64-10.

    The 64-bit ``seed`` expands to the 128-bit Philox key
    ``(seed, mix64(seed))``; the block counter starts at 0.  All draw methods
    consume whole 64-bit words from the block sequence.
    """

    __slots__ = ("key", "_counter", "_block", "_block_pos", "_gauss_spare")

    def __init__(self, seed: int):
        self.key = (seed & _MASK64, mix64(seed))
        self._counter = 0
        self._block: tuple[int, int, int, int] = ()  # type: ignore[assignment]
        self._block_pos = 4
        self._gauss_spare: float | None = None

    @classmethod
    def for_problem(cls, base_seed: int, *path: int) -> "Stream":
        return cls(derive_key(base_seed, *path))

    def next64(self) -> int:
        """Next raw 64-bit word."""
        if self._block_pos == 4:
            self._block = philox4x64((self._counter, 0, 0, 0), self.key)
            self._counter = (self._counter + 1) & _MASK64
            self._block_pos = 0
        word = self._block[self._block_pos]
        self._block_pos += 1
        return word

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next64() >> 11) * (2.0 ** -53)

    def randbelow(self, n: int) -> int:
        """Unbiased uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        # Largest multiple of n that fits in 64 bits; reject draws above it.
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            word = self.next64()
            if word < limit:
                return word % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.randbelow(hi - lo + 1)

    def coin(self, p: float = 0.5) -> bool:
        return self.random() < p

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randbelow(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher–Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        """k distinct elements, order-of-selection, without replacement."""
        n = len(seq)
        if k > n:
            raise ValueError(f"cannot sample {k} from {n}")
        pool = list(seq)
        out = []
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out

    def gauss(self) -> float:
        """Standard normal via Box–Muller (both values used, one cached)."""
        if self._gauss_spare is not None:
            value = self._gauss_spare
            self._gauss_spare = None
            return value
        # u1 in (0, 1]: avoid log(0).
        u1 = 1.0 - self.random()
        u2 = self.random()
        radius = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        self._gauss_spare = radius * math.sin(theta)
        return radius * math.cos(theta)

    def softmax_choice(self, items, weights) -> object:
        """Pick items[i] with probability proportional to exp(weights[i])."""
        if len(items) != len(weights) or not items:
            raise ValueError("items/weights mismatch or empty")
        top = max(weights)
        expw = [math.exp(w - top) for w in weights]
        total = sum(expw)
        u = self.random() * total
        acc = 0.0
        for item, w in zip(items, expw):
            acc += w
            if u < acc:
                return item
        return items[-1]  # u == total after float round-off
