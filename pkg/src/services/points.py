"""
Point sets.

Seeded generators and the plain-text point format:

    d=<d> n=<N>
    x_1 x_2 ... x_d
    ...

Author : Coke
Date   : 2025-06-04
"""

import logging
from pathlib import Path

import numpy as np

from src.core.exceptions import ArgumentError
from src.schemas.domain import PointSet, PointSetKind
from src.utils.prng import SplitMix64

logger = logging.getLogger(__name__)

CLUSTER_SIDE = 0.1


def integer_root(n: int, d: int) -> int | None:
    """k with k^d == n, or None when n is not a perfect d-th power."""
    k = max(1, round(n ** (1 / d)))
    for candidate in (k - 1, k, k + 1):
        if candidate >= 1 and candidate**d == n:
            return candidate
    return None


def _strata(k: int, d: int) -> np.ndarray:
    """(k^d, d) lower corners of the k^d subcubes, lexicographic with the first axis slowest."""
    axes = np.meshgrid(*([np.arange(k) / k] * d), indexing="ij")
    return np.stack([axis.ravel() for axis in axes], axis=1)


def gen_point_set(kind: PointSetKind | str, d: int, N: int, seed: int = 0) -> PointSet:
    """
    Generate a point set of the unit cube, deterministic for fixed (kind, d, N, seed).

    - midpoint_grid: centers of the k^d subcubes, N = k^d.
    - full_random: N independent uniform points.
    - jittered: one uniform point in each of the k^d subcubes, N = k^d.
    - clustered: N uniform points in [0, 0.1]^d.
    - single: N copies of the cube center.

    Args:
        kind (PointSetKind | str): Generator.
        d (int): Dimension.
        N (int): Number of points.
        seed (int): Unsigned 64-bit seed of the SplitMix64 stream.

    Returns:
        PointSet: The generated points.

    Raises:
        ArgumentError: If d, N or the seed is out of range, or N is not a d-th power for a grid kind.
    """
    try:
        kind = PointSetKind(kind)
    except ValueError:
        raise ArgumentError(detail=f"unknown point set kind `{kind}`.", param="pointset") from None
    if d < 1:
        raise ArgumentError(detail="dimension must be >= 1.", param="d")
    if N < 1:
        raise ArgumentError(detail="at least one point is required.", param="N")

    rng = SplitMix64(seed)
    if kind in (PointSetKind.MIDPOINT_GRID, PointSetKind.JITTERED):
        k = integer_root(N, d)
        if k is None:
            raise ArgumentError(detail=f"{kind.value} needs N to be a perfect {d}-th power, got {N}.", param="N")
        offsets = np.full((N, d), 0.5) if kind == PointSetKind.MIDPOINT_GRID else rng.uniform((N, d))
        points = _strata(k, d) + offsets / k
    elif kind == PointSetKind.FULL_RANDOM:
        points = rng.uniform((N, d))
    elif kind == PointSetKind.CLUSTERED:
        points = rng.uniform((N, d), high=CLUSTER_SIDE)
    else:
        points = np.full((N, d), 0.5)

    logger.debug("generated %s d=%d N=%d seed=%d", kind.value, d, N, seed)
    return PointSet.build(dim=d, points=points, label=f"{kind.value}:seed={seed}")


def format_point_set(pts: PointSet) -> str:
    """Serialize to the text format with 17 significant digits per coordinate."""
    lines = [f"d={pts.dim} n={pts.n}"]
    lines.extend(" ".join(f"{x:.17g}" for x in row) for row in pts.points)
    return "\n".join(lines) + "\n"


def parse_point_set(text: str, label: str = "") -> PointSet:
    """
    Parse the text format.

    Raises:
        ArgumentError: If the header is missing or inconsistent with the body.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise ArgumentError(detail="empty point file.", param="points_file")

    try:
        header = dict(item.split("=", 1) for item in lines[0].split())
        d, n = int(header["d"]), int(header["n"])
        rows = [[float(value) for value in line.split()] for line in lines[1:]]
    except (KeyError, ValueError) as e:
        raise ArgumentError(detail=f"malformed point file: {e}", param="points_file") from e

    if len(rows) != n or any(len(row) != d for row in rows):
        raise ArgumentError(detail=f"header announces d={d} n={n}, body disagrees.", param="points_file")

    return PointSet.build(dim=d, points=np.array(rows, dtype=np.float64).reshape(n, d), label=label)


def save_point_set(path: Path, pts: PointSet) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_point_set(pts), encoding="utf-8")


def load_point_set(path: Path) -> PointSet:
    if not path.is_file():
        raise ArgumentError(detail=f"file not found: {path}", param="points_file")
    return parse_point_set(path.read_text(encoding="utf-8"), label=path.stem)
