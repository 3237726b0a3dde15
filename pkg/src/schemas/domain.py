"""
Domain schemas.

Point sets, grid measures and test functions sampled on grids.

Author : Coke
Date   : 2025-06-03
"""

from enum import Enum
from functools import cached_property
from typing import Self

import numpy as np
from pydantic import Field, model_validator

from src.schemas.base import BaseModel, FloatArray

# Slack on the density cap μ ≤ dx, relative to the cell volume.
MASS_RTOL = 1e-12


class Cube(BaseModel):
    """Axis-aligned cube [origin, origin + side]^d."""

    origin: float = Field(0.0, description="lower corner, identical on every axis.")
    side: float = Field(1.0, gt=0, description="side length.")

    @property
    def is_unit(self) -> bool:
        return self.origin == 0.0 and self.side == 1.0


class PointSetKind(str, Enum):
    MIDPOINT_GRID = "midpoint_grid"
    FULL_RANDOM = "full_random"
    JITTERED = "jittered"
    CLUSTERED = "clustered"
    SINGLE = "single"


class PointSet(BaseModel):
    """N points of the unit cube, the atoms of the empirical measure."""

    dim: int = Field(..., ge=1)
    points: FloatArray = Field(..., description="(N, dim) coordinates in [0, 1].")
    label: str = ""

    @model_validator(mode="after")
    def check_points(self) -> Self:
        if self.points.ndim != 2 or self.points.shape[1] != self.dim:
            raise ValueError(f"points must have shape (N, {self.dim}), got {self.points.shape}.")
        if self.points.shape[0] < 1:
            raise ValueError("a point set needs at least one point.")
        if not np.all(np.isfinite(self.points)) or self.points.min() < 0.0 or self.points.max() > 1.0:
            raise ValueError("every coordinate must lie in [0, 1].")
        return self

    @property
    def n(self) -> int:
        return int(self.points.shape[0])


class GridMeasure(BaseModel):
    """
    Per-cell masses of an absolutely continuous measure on a uniform grid of a cube.

    Cells are flattened in C order of their multi-index; every mass lies in [0, cell volume].
    """

    dim: int = Field(..., ge=1)
    res: int = Field(..., ge=2, description="cells per axis.")
    cube: Cube = Cube()
    cell_mass: FloatArray

    @model_validator(mode="after")
    def check_masses(self) -> Self:
        if self.cell_mass.shape != (self.res**self.dim,):
            raise ValueError(f"cell_mass must have {self.res**self.dim} entries.")
        if not np.all(np.isfinite(self.cell_mass)) or self.cell_mass.min() < 0.0:
            raise ValueError("cell masses must be finite and nonnegative.")
        if self.cell_mass.max() > self.density_cap * (1 + MASS_RTOL):
            raise ValueError("cell masses must not exceed the cell volume.")
        return self

    @property
    def n_cells(self) -> int:
        return self.res**self.dim

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.res,) * self.dim

    @property
    def cell_width(self) -> float:
        return self.cube.side / self.res

    @property
    def cell_volume(self) -> float:
        return self.cell_width**self.dim

    @property
    def density_cap(self) -> float:
        """Largest admissible mass of a cell (μ ≤ dx)."""
        return self.cell_volume

    @property
    def total_mass(self) -> float:
        return float(self.cell_mass.sum())

    @cached_property
    def support(self) -> np.ndarray:
        """Indices of the cells with positive mass."""
        return np.flatnonzero(self.cell_mass > 0.0)

    @property
    def is_lebesgue(self) -> bool:
        """Uniform Lebesgue measure of the unit cube."""
        return self.cube.is_unit and bool(np.all(self.cell_mass == self.cell_volume))

    @cached_property
    def axis_centers(self) -> np.ndarray:
        return self.cube.origin + (np.arange(self.res) + 0.5) * self.cell_width

    @cached_property
    def centers(self) -> np.ndarray:
        """(n_cells, dim) cell midpoints in C order."""
        axes = np.meshgrid(*([self.axis_centers] * self.dim), indexing="ij")
        centers = np.stack([axis.ravel() for axis in axes], axis=1)
        centers.setflags(write=False)
        return centers


class FieldKind(str, Enum):
    EXTREMAL_EPS = "extremal_eps"
    DISTANCE_CAP = "distance_cap"
    LINEAR = "linear"
    PRODUCT_SINE = "product_sine"
    SAMPLED = "sampled"


class FieldFamily(BaseModel):
    """
    Analytic family of a test function.

    - extremal_eps: f(x) = min(eps, min_k ||x - x_k||)
    - distance_cap: f(x) = min(||x - anchor||, delta)
    - linear: f(x) = <coef, x> + offset
    - product_sine: f(x) = offset + prod_i sin(pi * coef_i * x_i)
    - sampled: values given on the grid, no formula
    """

    kind: FieldKind
    eps: float | None = None
    delta: float | None = None
    coef: tuple[float, ...] = ()
    offset: float = 0.0

    @model_validator(mode="after")
    def check_params(self) -> Self:
        if self.kind == FieldKind.EXTREMAL_EPS and not (self.eps is not None and self.eps > 0):
            raise ValueError("extremal_eps needs eps > 0.")
        if self.kind == FieldKind.DISTANCE_CAP and not (self.delta is not None and self.delta > 0):
            raise ValueError("distance_cap needs delta > 0.")
        if self.kind in (FieldKind.LINEAR, FieldKind.PRODUCT_SINE) and not self.coef:
            raise ValueError(f"{self.kind.value} needs a coefficient vector.")
        return self

    @property
    def parameter(self) -> float | None:
        """eps or delta, whichever the family carries."""
        if self.kind == FieldKind.EXTREMAL_EPS:
            return self.eps
        if self.kind == FieldKind.DISTANCE_CAP:
            return self.delta
        return None


class ScalarField(BaseModel):
    """A test function f and |∇f| sampled at the cell centers of a grid."""

    grid: GridMeasure
    values: FloatArray
    grad_mag: FloatArray
    family: FieldFamily
    sites: FloatArray | None = Field(None, description="point set (extremal_eps) or anchor (distance_cap).")
    scale: float = 1.0

    @model_validator(mode="after")
    def check_samples(self) -> Self:
        expected = (self.grid.n_cells,)
        if self.values.shape != expected or self.grad_mag.shape != expected:
            raise ValueError(f"values and grad_mag must have {self.grid.n_cells} entries.")
        if not np.all(np.isfinite(self.grad_mag)) or self.grad_mag.min() < 0.0:
            raise ValueError("grad_mag must be finite and nonnegative.")
        return self

    def scaled(self, factor: float) -> "ScalarField":
        """The field factor * f: values scale by factor, gradient magnitudes by |factor|."""
        return ScalarField(
            grid=self.grid,
            values=self.values * factor,
            grad_mag=self.grad_mag * abs(factor),
            family=self.family,
            sites=self.sites,
            scale=self.scale * factor,
        )
