"""
SplitMix64 generator.

A documented 64-bit generator so that point sets and probes are reproducible bit for bit
on any platform and in any language. Seed 0 is valid.

Author : Coke
Date   : 2025-06-03
"""

import numpy as np

from src.core.exceptions import ArgumentError
from src.utils.constants import DOUBLE_UNIT, GOLDEN_GAMMA, UINT64_MASK


class SplitMix64:
    """SplitMix64 stream: state += golden gamma, then a two-round xor-shift-multiply finalizer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        """
        Args:
            seed (int): Unsigned 64-bit seed.

        Raises:
            ArgumentError: If the seed is not in [0, 2^64).
        """
        if not 0 <= seed <= UINT64_MASK:
            raise ArgumentError(detail="seed must be an unsigned 64-bit integer.", param="seed")
        self._state = seed

    def next_uint64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & UINT64_MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & UINT64_MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & UINT64_MASK
        return z ^ (z >> 31)

    def next_double(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * DOUBLE_UNIT

    def uniform(self, shape: tuple[int, ...], low: float = 0.0, high: float = 1.0) -> np.ndarray:
        """
        Fill an array of the given shape in C order with uniform draws in [low, high).

        Args:
            shape (tuple[int, ...]): Output shape.
            low (float): Lower bound.
            high (float): Upper bound.

        Returns:
            np.ndarray: float64 array of draws.
        """
        size = int(np.prod(shape, dtype=np.int64))
        draws = np.fromiter((self.next_double() for _ in range(size)), dtype=np.float64, count=size)
        return (low + (high - low) * draws).reshape(shape)
