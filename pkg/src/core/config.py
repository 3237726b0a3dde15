"""
Config settings.

This file holds the project configuration settings loaded from environment variables.

Author : Coke
Date   : 2025-06-02
"""

from pydantic import Field
from pydantic_settings import BaseSettings as _BaseSettings
from pydantic_settings import SettingsConfigDict


class BaseSettings(_BaseSettings):
    """Pydantic BaseSettings class."""

    # Pydantic model config for reading from an .env file, every variable carries the `WQL_` prefix.
    model_config = SettingsConfigDict(env_prefix="WQL_", env_file=".env", env_file_encoding="utf-8", extra="ignore")


class Config(BaseSettings):
    """Project configuration settings loaded from environment variables."""

    # Worker parallelism for sweeps (WQL_THREADS).
    THREADS: int = Field(1, ge=1)

    # Largest number of grid cells a GridMeasure may hold.
    MAX_CELLS: int = Field(2**22, ge=1)

    # Largest number of integer flow units N * cells a transport problem may carry.
    MAX_UNITS: int = Field(2**62, ge=1)

    # Transport costs are distances rounded to this many decimal digits.
    COST_DECIMALS: int = Field(12, ge=1, le=15)

    # W1 drops edges longer than PRUNE_FACTOR * covering radius before solving.
    PRUNE_FACTOR: float = Field(4.0, gt=1.0)

    # Default number of random probes of the density check.
    PROBES: int = Field(100, ge=1)

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_CONFIG: str = "logging.ini"
    LOG_DIR: str = "logs"

    APP_VERSION: str = "0.1.0"


settings = Config()  # type: ignore
