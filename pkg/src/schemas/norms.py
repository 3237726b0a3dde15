"""
Norm schemas.

Author : Coke
Date   : 2025-06-06
"""

from pydantic import Field

from src.schemas.base import BaseModel


class NormSummary(BaseModel):
    """Norms of a gradient-magnitude field on a cell subset."""

    l1: float = Field(..., ge=0)
    linf: float = Field(..., ge=0)
    lorentz_d1: float = Field(..., ge=0)
    interp_bound: float = Field(..., ge=0, description="d * linf^((d-1)/d) * l1^(1/d)")
    subset: str = Field("cube", description="`cube` or `cells:<count>`.")
