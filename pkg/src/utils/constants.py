"""
constants file.

Author : Coke
Date   : 2025-06-02
"""

import math

from scipy.special import gamma

# Absolute tolerances (dimensionless or in units of length)
IDENTITY_TOL = 1e-9
OVERLAP_TOL = 1e-6
COUNT_TOL = 1e-12

# Experiment defaults
DEFAULT_RES = 64
DEFAULT_DELTAS = (0.5, 1.0)

# SplitMix64
UINT64_MASK = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
DOUBLE_UNIT = 1.0 / (1 << 53)


def ball_volume(d: int) -> float:
    """Volume ω_d of the Euclidean unit ball in dimension d."""
    return float(math.pi ** (d / 2) / gamma(d / 2 + 1))


def density_constant(d: int) -> float:
    """Constant ω_d·2^d of the ball-counting bound: |B(x, 2t)| = ω_d·2^d·t^d."""
    return ball_volume(d) * 2**d
