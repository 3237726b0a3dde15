"""
Pydantic models of measures, fields, plans and reports.

Author : Coke
Date   : 2025-06-04
"""

from .base import BaseModel
from .domain import Cube, FieldFamily, FieldKind, GridMeasure, PointSet, PointSetKind, ScalarField
from .transport import DensityReport, Region, TransportKind, TransportPlan

__all__ = [
    "BaseModel",
    "Cube",
    "FieldFamily",
    "FieldKind",
    "GridMeasure",
    "PointSet",
    "PointSetKind",
    "ScalarField",
    "DensityReport",
    "Region",
    "TransportKind",
    "TransportPlan",
]
