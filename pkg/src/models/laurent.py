from typing import Optional

from pydantic import Field, model_validator

from src.enums.frames import UnitRootKindEnum
from .base import ProductionBaseModel


class CircleExtrema(ProductionBaseModel):
    """Extrema of q(theta) = |p(e^{i theta})|^2 over the unit circle."""

    min_sq: float = Field(ge=0, description="inf over the circle of |p|^2")
    argmin_theta: float = Field(ge=0, description="An angle in [0, 2pi) attaining min_sq")
    max_sq: float = Field(ge=0, description="sup over the circle of |p|^2")
    argmax_theta: float = Field(ge=0, description="An angle in [0, 2pi) attaining max_sq")

    @model_validator(mode="after")
    def validate_order(self):
        if self.min_sq > self.max_sq:
            raise ValueError(f"min_sq={self.min_sq} exceeds max_sq={self.max_sq}")
        return self


class UnitRootVerdict(ProductionBaseModel):
    """
    Unit-root decision for a Laurent polynomial.

    `margin` is min |p| on the circle divided by sum |a_j|; `theta` is a witness
    angle for `has_unit_root`.
    """

    kind: UnitRootKindEnum
    theta: Optional[float] = Field(None, description="Witness angle of a unit root")
    margin: Optional[float] = Field(None, gt=0, description="Normalized distance from zero")
    min_modulus: float = Field(ge=0, description="min over the circle of |p|")
    exact: bool = Field(False, description="Decided in exact integer arithmetic")

    @model_validator(mode="after")
    def validate_kind_fields(self):
        if self.kind is UnitRootKindEnum.HAS_UNIT_ROOT and self.theta is None:
            raise ValueError("has_unit_root requires a witness angle")
        if self.kind is UnitRootKindEnum.NO_UNIT_ROOT and self.margin is None:
            raise ValueError("no_unit_root requires a positive margin")
        return self
