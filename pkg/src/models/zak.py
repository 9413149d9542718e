from typing import List, Optional, Tuple

from pydantic import Field, model_validator

from .base import ProductionBaseModel
from .frames import FrameReport


class OracleBounds(ProductionBaseModel):
    """Frame-sum estimates min/max over test functions f of sum |<f, M_m T_2pin g>|^2 / ||f||^2."""

    A_est: float = Field(ge=0)
    B_est: float = Field(ge=0)
    m_max: int = Field(ge=1, description="Modulation truncation |m| <= m_max")
    n_max: int = Field(ge=0, description="Translation truncation |n| <= n_max, exact by support overlap")
    test_count: int = Field(ge=1)

    @model_validator(mode="after")
    def validate_order(self):
        if self.A_est > self.B_est:
            raise ValueError(f"A_est={self.A_est} exceeds B_est={self.B_est}")
        return self

    @property
    def spread(self) -> float:
        """(B_est - A_est) / B_est, zero for a tight family."""
        return (self.B_est - self.A_est) / self.B_est if self.B_est > 0 else 0.0


class ZakExtrema(ProductionBaseModel):
    min_abs2: float = Field(ge=0)
    max_abs2: float = Field(ge=0)
    n_t: int = Field(ge=8)
    n_w: int = Field(ge=8)


class ConsistencyCheck(ProductionBaseModel):
    name: str
    passed: bool
    detail: str


class VerifyReport(ProductionBaseModel):
    """Analysis verdict next to the independent oracle measurements."""

    analysis: FrameReport
    oracle: OracleBounds
    zak_min: float = Field(ge=0)
    zak_max: float = Field(ge=0)
    zak_min_doubled: float = Field(ge=0, description="Zak minimum with the grid size doubled")
    grid: Tuple[int, int]
    kappa: Optional[float] = Field(None, gt=0, description="Calibrated kappa used for the bound comparison")
    checks: List[ConsistencyCheck]
    consistent: bool
