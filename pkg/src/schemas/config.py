"""
Experiment configuration schema.

Flat `key = value` files, one key per line, `#` starts a comment. Lists are comma separated.

    mode = eval
    d = 2
    m = 64
    N = 16
    pointset = midpoint_grid
    family = extremal_eps
    eps = 0.05

Author : Coke
Date   : 2025-06-12
"""

from enum import Enum
from typing import Any, Literal, Self

from pydantic import Field, ValidationError, field_validator, model_validator

from src.core.exceptions import ConfigError
from src.schemas.base import BaseModel
from src.schemas.domain import FieldKind, PointSetKind
from src.utils.constants import DEFAULT_DELTAS, DEFAULT_RES, UINT64_MASK
from src.utils.utils import format_validation_errors


class Mode(str, Enum):
    EVAL = "eval"
    SWEEP = "sweep"
    LEMMA1 = "lemma1"
    LEMMA4 = "lemma4"
    AUDIT = "audit"
    GEN_POINTS = "gen-points"
    PLOT = "plot"


class ExperimentConfig(BaseModel):
    """One experiment; unknown keys are rejected."""

    mode: Mode | None = Field(None, description="overridden by the command line mode.")

    # instance
    d: int = Field(2, ge=1)
    m: int = Field(DEFAULT_RES, ge=2)
    N: int | None = Field(None, ge=1)
    sizes: list[int] = Field(default_factory=list, description="N values of a sweep.")
    pointset: PointSetKind = PointSetKind.MIDPOINT_GRID
    seed: int = Field(0, ge=0, le=UINT64_MASK)
    seeds: list[int] = Field(default_factory=list)
    points_file: str | None = None

    # test function
    family: FieldKind = FieldKind.EXTREMAL_EPS
    eps: float | None = Field(None, gt=0)
    eps_scale: float | None = Field(None, gt=0, description="eps = eps_scale * W∞ of each instance.")
    delta: float | None = Field(None, gt=0)
    coef: list[float] = Field(default_factory=list)
    offset: float = 0.0
    anchor: list[float] = Field(default_factory=list)

    # reports
    deltas: list[float] | None = Field(None, description="exponents of the interpolating family, default [0.5, 1, d].")
    probes: int = Field(100, ge=1)

    # localized estimates
    example: Literal["ball", "cone"] = "ball"
    R: float = Field(0.5, gt=0)
    h: float = Field(0.05, gt=0)
    r: float = Field(0.5, gt=0)

    # plot
    input: str | None = None
    x: str = "N"
    y: str = "winf"
    logx: bool = True
    logy: bool = True

    # outputs
    csv: str = "results.csv"
    svg: str = "plot.svg"
    out: str | None = None

    @field_validator("sizes", "seeds", "coef", "anchor", "deltas", mode="before")
    @classmethod
    def split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @field_validator("seeds")
    @classmethod
    def check_seeds(cls, value: list[int]) -> list[int]:
        if any(not 0 <= seed <= UINT64_MASK for seed in value):
            raise ValueError("seeds must be unsigned 64-bit integers.")
        return value

    @field_validator("sizes")
    @classmethod
    def check_sizes(cls, value: list[int]) -> list[int]:
        if any(n < 1 for n in value):
            raise ValueError("sizes must be positive.")
        return value

    @model_validator(mode="after")
    def check_consistency(self) -> Self:
        if self.eps is not None and self.eps_scale is not None:
            raise ValueError("eps and eps_scale are exclusive.")
        if self.deltas is not None and any(not 0 < delta <= self.d for delta in self.deltas):
            raise ValueError(f"deltas must lie in (0, {self.d}].")
        if self.anchor and len(self.anchor) != self.d:
            raise ValueError(f"anchor must have {self.d} coordinates.")
        return self

    @property
    def delta_list(self) -> list[float]:
        return self.deltas if self.deltas is not None else [*DEFAULT_DELTAS, float(self.d)]

    @property
    def seed_list(self) -> list[int]:
        return sorted(set(self.seeds)) if self.seeds else [self.seed]


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse a flat `key = value` experiment file.

    Args:
        text (str): File contents.

    Returns:
        ExperimentConfig: The validated configuration.

    Raises:
        ConfigError: If a line is malformed, a key is unknown or repeated, or a value is invalid.
    """
    data: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(detail=f"line {number}: expected `key = value`, got `{line}`.")

        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ExperimentConfig.model_fields:
            raise ConfigError(detail=f"line {number}: unknown key `{key}`.")
        if key in data:
            raise ConfigError(detail=f"line {number}: key `{key}` given twice.")
        data[key] = value

    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(detail=format_validation_errors(e)) from e
