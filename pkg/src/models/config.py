from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator

from src.enums.frames import KappaConventionEnum
from .base import ProductionBaseModel
from .frames import GridParams


class Config(ProductionBaseModel):
    """Run configuration. Sources in increasing precedence: defaults, env, config file, flags."""

    xi_samples: int = Field(512, ge=16, description="xi samples per generator base")
    grid_n: int = Field(1024, ge=64, description="Zak grid size N_t = N_w, a power of two")
    tol: float = Field(1e-9, gt=0, lt=1e-3, description="Unit-root tolerance relative to sum |a_j|")
    kappa_convention: KappaConventionEnum = Field(
        KappaConventionEnum.CALIBRATED, description="Convention of the headline frame bounds"
    )
    oracle_m_max: int = Field(512, ge=32, description="Modulation truncation of the frame-sum oracle")
    oracle_tests: int = Field(20, ge=1, description="Size of the seeded test-function corpus")
    seed: int = Field(20240611, description="Seed of the test-function corpus")
    output: Optional[Path] = Field(None, description="Output file; stdout when unset")

    @field_validator("grid_n")
    @classmethod
    def validate_power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"grid_n must be a power of two, got {value}")
        return value

    def grid_params(self) -> GridParams:
        return GridParams(xi_samples=self.xi_samples, unit_root_tol=self.tol)
