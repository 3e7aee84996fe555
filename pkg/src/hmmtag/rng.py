"""Deterministic pseudo-random numbers (splitmix64).

Cross-validation fold shuffles and generated test models must be identical
across platforms and Python versions, so we pin the generator algorithm
instead of relying on random.Random. This is the splitmix64 sequence:

    state += 0x9E3779B97F4A7C15                   (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2^64)
    output z ^ (z >> 31)
"""

from __future__ import annotations

from typing import Iterator

_MASK64 = (1 << 64) - 1


def splitmix64_stream(seed: int) -> Iterator[int]:
    """Yield the splitmix64 sequence for a seed, forever."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def randrange(stream: Iterator[int], n: int) -> int:
    """Next value in [0, n). Modulo mapping; bias is irrelevant at our n."""
    if n <= 0:
        raise ValueError("n must be positive")
    return next(stream) % n


def shuffled(items, seed: int) -> list:
    """Return a new list with items in Fisher-Yates order driven by the seed."""
    out = list(items)
    stream = splitmix64_stream(seed)
    for i in range(len(out) - 1, 0, -1):
        j = randrange(stream, i + 1)
        out[i], out[j] = out[j], out[i]
    return out
