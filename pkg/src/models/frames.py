from typing import Dict, List, Optional

from pydantic import Field, model_validator

from src.enums.frames import FunctionSpaceEnum, KappaConventionEnum, VerdictEnum
from .base import ProductionBaseModel
from .laurent import UnitRootVerdict


class GridParams(ProductionBaseModel):
    """Sampling and tolerance parameters of the continuous analysis."""

    xi_samples: int = Field(
        512, ge=16, description="Uniform xi samples per generator base, both endpoints included"
    )
    xi_tol_factor: float = Field(
        1e-10, gt=0, description="Golden-section stopping width as a fraction of the base length"
    )
    zero_tol: float = Field(
        1e-18, gt=0, description="not_frame threshold for m_sq relative to the squared value scale"
    )
    unit_root_tol: float = Field(1e-9, gt=0, lt=1e-3, description="Tolerance of unit_root_test")
    refine_minima: int = Field(8, ge=1, description="Local minima per generator refined in xi")


class FrameBounds(ProductionBaseModel):
    """A0 = kappa * m_sq and B0 = kappa * M_sq for one normalization convention."""

    convention: KappaConventionEnum
    kappa: float = Field(gt=0)
    m_sq: float = Field(ge=0)
    M_sq: float = Field(ge=0)
    A0: float = Field(ge=0)
    B0: float = Field(ge=0)

    @model_validator(mode="after")
    def validate_order(self):
        if self.m_sq > self.M_sq:
            raise ValueError(f"m_sq={self.m_sq} exceeds M_sq={self.M_sq}")
        if self.A0 > self.B0:
            raise ValueError(f"A0={self.A0} exceeds B0={self.B0}")
        return self

    @property
    def condition_ratio(self) -> Optional[float]:
        """B0 / A0, independent of kappa; None when A0 = 0."""
        return self.B0 / self.A0 if self.A0 > 0 else None


class GeneratorEntry(ProductionBaseModel):
    base: str = Field(description="Generator base interval inside [0, 2pi)")
    widths: List[int] = Field(description="Step-widths n such that base + 2 pi n lies in E")


class Witness(ProductionBaseModel):
    """A point (xi, theta) where a chain polynomial (nearly) vanishes on the unit circle."""

    generator_index: int = Field(ge=0)
    xi: Optional[float] = Field(None, description="None for xi-independent chains (step functions, g = 1)")
    theta: float = Field(ge=0, description="Angle on the unit circle")
    value_sq: float = Field(ge=0, description="Re-evaluated |p_xi(e^{i theta})|^2")
    zero_chain: bool = Field(False, description="The whole characteristic chain vanishes at xi")
    exact: bool = Field(False, description="Found in exact integer arithmetic")


class GeneratorSummary(ProductionBaseModel):
    index: int = Field(ge=0)
    base: str
    widths: List[int]
    polynomial: Optional[str] = Field(None, description="Chain polynomial when it does not depend on xi")
    m_sq: float = Field(ge=0)
    M_sq: float = Field(ge=0)
    worst_xi: Optional[float] = None
    worst_theta: float = Field(ge=0)
    best_xi: Optional[float] = None
    best_theta: float = Field(ge=0)
    unit_root: Optional[UnitRootVerdict] = None


class FrameReport(ProductionBaseModel):
    """
    Result of a frame decision.

    `bounds` is present exactly when the verdict is frame and then carries both
    normalization conventions; a not_frame verdict always carries a witness.
    """

    input: str = Field(description="Echo of the analyzed set and function")
    decomposition: List[GeneratorEntry]
    space: FunctionSpaceEnum
    verdict: VerdictEnum
    witness: Optional[Witness] = None
    witnesses: List[Witness] = Field(default_factory=list)
    m_sq: float = Field(ge=0)
    M_sq: float = Field(ge=0)
    bounds: Optional[Dict[KappaConventionEnum, FrameBounds]] = None
    condition_ratio: Optional[float] = Field(None, description="M_sq / m_sq, the normalization-free B0/A0")
    per_generator: List[GeneratorSummary]
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_verdict_fields(self):
        if self.verdict is VerdictEnum.FRAME:
            if self.m_sq <= 0:
                raise ValueError("a frame verdict requires m_sq > 0")
            if not self.bounds:
                raise ValueError("a frame verdict requires bounds")
        elif self.bounds is not None:
            raise ValueError(f"bounds are only reported for frames, verdict is {self.verdict}")
        if self.verdict is VerdictEnum.NOT_FRAME and self.witness is None:
            raise ValueError("a not_frame verdict requires a witness")
        return self


class DecompositionReport(ProductionBaseModel):
    input: str
    measure: str = Field(description="Lebesgue measure of the set as a multiple of pi")
    decomposition: List[GeneratorEntry]
    space: FunctionSpaceEnum
