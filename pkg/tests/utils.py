"""
Test utils.

Author  : Coke
Date    : 2025-06-14
"""

import csv
import random
from pathlib import Path

import numpy as np

from src.schemas.domain import PointSet
from src.services.points import gen_point_set


def random_piecewise_field(rng: random.Random, n_cells: int, *, levels: int = 4, scale: float = 5.0) -> np.ndarray:
    """
    Gradient-magnitude samples taking a few random nonnegative values.

    Args:
        rng (random.Random): Seeded generator.
        n_cells (int): Number of cells.
        levels (int): Number of distinct candidate values, zero included.
        scale (float): Upper bound of the values.

    Returns:
        np.ndarray: (n_cells,) samples.
    """
    values = [0.0] + [rng.uniform(0.0, scale) for _ in range(levels - 1)]
    return np.array([rng.choice(values) for _ in range(n_cells)], dtype=np.float64)


def single_layer_field(rng: random.Random, n_cells: int, value: float) -> np.ndarray:
    """`value` on a random nonempty set of cells, zero elsewhere."""
    count = rng.randint(1, n_cells)
    samples = np.zeros(n_cells, dtype=np.float64)
    samples[rng.sample(range(n_cells), count)] = value
    return samples


def random_point_set(rng: random.Random, d: int, n: int) -> PointSet:
    """Uniform random points with a random 64-bit seed."""
    return gen_point_set("full_random", d, n, rng.getrandbits(64))


def reflect(pts: PointSet, axis: int) -> PointSet:
    points = pts.points.copy()
    points[:, axis] = 1.0 - points[:, axis]
    return PointSet.build(dim=pts.dim, points=points, label=f"{pts.label}:reflected")


def swap_axes(pts: PointSet) -> PointSet:
    return PointSet.build(dim=pts.dim, points=pts.points[:, ::-1], label=f"{pts.label}:swapped")


def write_config(directory: Path, text: str, name: str = "experiment.cfg") -> Path:
    """Write an experiment file and return its path."""
    path = directory / name
    path.write_text(text, encoding="utf-8")
    return path


def read_rows(path: Path) -> list[dict[str, str]]:
    with path.open("r", encoding="utf-8", newline="") as file:
        return list(csv.DictReader(file))
