"""xorshift64* pseudo-random generator.

Fixed here (and in the README) so any implementation, in any language, can
reproduce the streams bit-exactly:

    state ^= state >> 12
    state ^= (state << 25) mod 2^64
    state ^= state >> 27
    output = (state * 2685821657736338717) mod 2^64

Doubles in [0, 1) take the top 53 bits: (output >> 11) * 2^-53.  A zero seed
is replaced by 0x9E3779B97F4A7C15.  Integer draws below n use output mod n.
"""
from __future__ import annotations

__all__ = ["Xorshift64Star", "mix64"]

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 2685821657736338717
_ZERO_SEED_REPLACEMENT = 0x9E3779B97F4A7C15
_TWO_POW_MINUS_53 = 2.0 ** -53


class Xorshift64Star:
    """Deterministic 64-bit generator; state is a single nonzero word."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64
        if self.state == 0:
            self.state = _ZERO_SEED_REPLACEMENT

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * _MULTIPLIER) & _MASK64

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * _TWO_POW_MINUS_53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_float()

    def int_below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("int_below needs n >= 1")
        return self.next_u64() % n


def mix64(x: int) -> int:
    """splitmix64 finalizer; used for order-independent checksums."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x
