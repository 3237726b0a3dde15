"""
Transport schemas.

Author : Coke
Date   : 2025-06-05
"""

from enum import Enum
from typing import Self

import numpy as np
from pydantic import Field, model_validator

from src.schemas.base import BaseModel, FloatArray, IndexArray


class TransportKind(str, Enum):
    W1 = "w1"
    W_INFINITY = "w_infinity"


class TransportPlan(BaseModel):
    """
    Coupling between the empirical measure of a point set and a grid measure.

    Entry i sends `mass[i]` from point `point_index[i]` to cell `cell_index[i]` at distance `distance[i]`.
    Masses are in probability units: each point ships 1/N, each cell receives its normalized mass.
    """

    kind: TransportKind
    value: float = Field(..., ge=0, description="mean cost (w1) or largest used distance (w_infinity).")
    n_points: int = Field(..., ge=1)
    dim: int = Field(..., ge=1)
    res: int = Field(..., ge=2)
    point_index: IndexArray
    cell_index: IndexArray
    mass: FloatArray
    distance: FloatArray

    @model_validator(mode="after")
    def check_entries(self) -> Self:
        size = self.point_index.shape
        if self.cell_index.shape != size or self.mass.shape != size or self.distance.shape != size:
            raise ValueError("plan entry arrays must have equal length.")
        if size[0] and self.mass.min() < 0.0:
            raise ValueError("plan masses must be nonnegative.")
        return self

    @property
    def entries(self) -> list[tuple[int, int, float, float]]:
        """(k, j, mass, distance) tuples."""
        return [
            (int(k), int(j), float(mass), float(dist))
            for k, j, mass, dist in zip(self.point_index, self.cell_index, self.mass, self.distance)
        ]

    def row_sums(self) -> np.ndarray:
        return np.bincount(self.point_index, weights=self.mass, minlength=self.n_points)

    def column_sums(self, n_cells: int) -> np.ndarray:
        return np.bincount(self.cell_index, weights=self.mass, minlength=n_cells)


class Region(BaseModel):
    """Cells X_k served by point k, with the masses μ_k it places there."""

    point: int
    cells: IndexArray
    masses: FloatArray


class DensityReport(BaseModel):
    """Ball counts #{i : ||x_i - x|| <= W∞} at probe locations against ω_d 2^d W∞^d N."""

    n_probes: int
    counts: IndexArray
    w_inf: float
    constant: float = Field(..., description="ω_d * 2^d")
    bound: float
    max_count: int
    max_ratio: float
