"""
Inequality report schemas.

Author : Coke
Date   : 2025-06-10
"""

from pydantic import Field

from src.schemas.base import BaseModel
from src.schemas.domain import GridMeasure, ScalarField
from src.schemas.norms import NormSummary


class InequalityReport(BaseModel):
    """Quadrature error, transport distances, gradient norms and every right-hand side with its ratio."""

    dim: int
    n: int
    res: int
    e: float = Field(..., ge=0, description="quadrature error.")
    w1: float = Field(..., ge=0)
    w_inf: float = Field(..., ge=0)
    norms: NormSummary
    rhs_kr: float = Field(..., ge=0, description="linf * w1")
    rhs_theorem: float = Field(..., ge=0, description="linf^((d-1)/d) * l1^(1/d) * N^(1/d) * w_inf^2")
    rhs_proposition: float = Field(..., ge=0, description="linf^((d-1)/d) * l1^(1/d) * N * w_inf^(d+1)")
    rhs_delta: dict[float, float] = Field(default_factory=dict)
    ratio_kr: float
    ratio_theorem: float
    ratio_proposition: float
    ratio_delta: dict[float, float] = Field(default_factory=dict)
    w_inf_inflation: float = Field(
        ..., ge=0, description="N^(1/d) * w_inf, the factor between w_inf and N^(1/d) w_inf^2."
    )


class DeltaRow(BaseModel):
    delta: float
    rhs: float
    ratio: float


class Lemma1Case(BaseModel):
    """A restricted measure, a test function vanishing at the origin and the radius of the supporting ball."""

    label: str
    measure: GridMeasure
    field: ScalarField
    radius: float = Field(..., gt=0)


class Lemma1Report(BaseModel):
    lhs: float = Field(..., ge=0, description="|∫ f dμ|")
    radius: float
    mass: float = Field(..., ge=0, description="μ(R^d)")
    lorentz: float = Field(..., ge=0, description="||∇f||_{L^{d,1}} on {||x|| <= R}")
    rhs: float = Field(..., ge=0, description="R * mass^((d-1)/d) * lorentz")
    ratio: float
    support_lorentz: float = Field(..., ge=0, description="||∇f||_{L^{d,1}} on the support of μ")
    support_rhs: float = Field(..., ge=0)
    support_ratio: float
    origin_value: float = Field(..., description="f at the cell containing the origin.")


class Lemma4Report(BaseModel):
    lhs: float = Field(..., ge=0, description="|∫_{B(0,r)} f dx|")
    radius: float
    l1: float
    linf: float
    ratio: float = Field(..., description="lhs / (r^d linf^((d-1)/d) l1^(1/d))")


class AuditReport(BaseModel):
    """Step-by-step evaluation of the transport argument on a bottleneck plan."""

    n: int
    w_inf: float
    e: float
    terms: tuple[float, ...] = Field(..., description="t_k = |∫_{X_k} f dμ_k - f(x_k)/N|")
    triangle_slack: float = Field(..., description="Σ t_k - E")
    lemma1_ratios: tuple[float, ...]
    region_lorentz: tuple[float, ...]
    region_interp: tuple[float, ...] = Field(..., description="d linf^((d-1)/d) l1^(1/d) on each X_k.")
    region_l1: tuple[float, ...]
    holder_lhs: float = Field(..., description="Σ_k l1(X_k)^(1/d)")
    holder_rhs: float = Field(..., description="N^((d-1)/d) (Σ_k l1(X_k))^(1/d)")
    overlap_ratio: float = Field(..., description="Σ_k l1(X_k) / (w_inf^d N l1)")
    overlap_bound: float = Field(..., description="ω_d 2^d")
    ball_terms_sum: float = Field(..., description="Σ_k |∫_{B(x_k, w_inf)} f - f(x_k) dx|")
