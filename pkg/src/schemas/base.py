"""
Base model schemas.

This module defines the base model and array field types used by every domain schema.

Author : Coke
Date   : 2025-06-03
"""

from typing import Annotated, Any, Self

import numpy as np
from pydantic import BaseModel as _BaseModel
from pydantic import BeforeValidator, ConfigDict, ValidationError
from pydantic.main import IncEx

from src.core.exceptions import ArgumentError
from src.utils.utils import format_validation_errors


def _float_array(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.float64)
    array.setflags(write=False)
    return array


def _index_array(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.int64)
    array.setflags(write=False)
    return array


# Read-only numpy copies of the input.
FloatArray = Annotated[np.ndarray, BeforeValidator(_float_array)]
IndexArray = Annotated[np.ndarray, BeforeValidator(_index_array)]


class BaseModel(_BaseModel):
    """Base schemas: immutable after construction, numpy arrays allowed."""

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        extra="forbid",
    )

    @classmethod
    def build(cls, **data: Any) -> Self:
        """
        Validate and construct, translating validation failures into ArgumentError.

        Examples:
            PointSet.build(dim=1, points=[[0.5]])

        Raises:
            ArgumentError: If validation fails.
        """
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ArgumentError(detail=f"{cls.__name__}: {format_validation_errors(e)}") from e

    def serializable_dict(
        self,
        include: IncEx | None = None,
        exclude: IncEx | None = None,
    ) -> dict:
        """
        Convert the object into a flat dictionary of python values.

        Args:
            include (IncEx | None): Whitelist of fields to include in the output.
            exclude (IncEx | None): Blacklist of fields to exclude from the output. Takes precedence over `include`.

        Returns:
            dict: A dictionary representation of the model.
        """

        return self.model_dump(mode="python", include=include, exclude=exclude)
