from __future__ import annotations

import enum
import logging
import math

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import NonNegativeInt
from pydantic import PositiveFloat
from pydantic import PositiveInt
from pydantic import field_validator
from pydantic import model_validator

from qimsim.grid import Axis
from qimsim.grid import WaveContext
from qimsim.optics import ArmSpec
from qimsim.optics import ThinLens
from qimsim.sources import BiphotonSource
from qimsim.sources import ClassicalEnsemble
from qimsim.sources import ModeProfile
from qimsim.sources import RandomPhaseEnsemble
from qimsim.sources import SourceModel

logger = logging.getLogger(__name__)

FROZEN = ConfigDict(frozen=True, extra="forbid")
NANOMETER = 1e-9


class SourceKind(str, enum.Enum):
    SPDC = "spdc"
    CLASSICAL = "classical"
    RANDOMPHASE = "randomphase"


class PumpSpec(BaseModel):
    model_config = FROZEN

    wavelength_nm: PositiveFloat

    @property
    def wavelength(self) -> float:
        return self.wavelength_nm * NANOMETER


class SourceSpec(BaseModel):
    """Source descriptor; ``seed`` and ``realizations`` are left unset to inherit settings."""

    model_config = FROZEN

    kind: SourceKind = SourceKind.SPDC
    epsilon: float = 1.0
    profile: ModeProfile = ModeProfile.FLAT
    sigma: PositiveFloat | None = None
    seed: NonNegativeInt | None = None
    realizations: PositiveInt | None = None

    @field_validator("epsilon")
    @classmethod
    def epsilon_nonzero(cls, v: float) -> float:
        if v == 0 or not math.isfinite(v):
            raise ValueError("epsilon must be nonzero and finite")
        return v

    @model_validator(mode="after")
    def gaussian_needs_sigma(self) -> SourceSpec:
        if self.profile is ModeProfile.GAUSSIAN and self.sigma is None:
            raise ValueError("gaussian profile requires sigma")
        return self

    def build(self, pump: PumpSpec, seed: int = 0) -> SourceModel:
        match self.kind:
            case SourceKind.SPDC:
                return BiphotonSource.from_pump_wavelength(
                    pump.wavelength, profile=self.profile, sigma=self.sigma
                )
            case SourceKind.CLASSICAL:
                return ClassicalEnsemble(self.epsilon, self.profile, self.sigma)
            case SourceKind.RANDOMPHASE:
                return RandomPhaseEnsemble(seed, self.profile, self.sigma)


class GridSpec(BaseModel):
    """Arm grid of ``n`` samples over ``extent`` and ``modes`` modes on [-p_max, p_max]."""

    model_config = FROZEN

    n: int = Field(default=1024, ge=64)
    extent: PositiveFloat = 2e-3
    p_max: PositiveFloat = 1e5
    modes: int = Field(default=512, ge=2)

    @property
    def arm_axis(self) -> Axis:
        return Axis.centered(self.extent, self.n)

    @property
    def mode_axis(self) -> Axis:
        return Axis.centered(2.0 * self.p_max, self.modes)


class ReferenceSpec(BaseModel):
    """Image reference |t_A(scale x)|^2 built from the first mask of arm A."""

    model_config = FROZEN

    scale: float

    @field_validator("scale")
    @classmethod
    def scale_nonzero(cls, v: float) -> float:
        if v == 0 or not math.isfinite(v):
            raise ValueError("reference scale must be nonzero and finite")
        return v


class BenchModel(BaseModel):
    model_config = FROZEN

    pump: PumpSpec
    source: SourceSpec = SourceSpec()
    arm_a: ArmSpec
    arm_b: ArmSpec
    grid: GridSpec = GridSpec()
    reference: ReferenceSpec | None = None

    @model_validator(mode="after")
    def reference_needs_mask(self) -> BenchModel:
        if self.reference is not None and self.arm_a.first_mask() is None:
            raise ValueError("reference requires a mask in arm A")
        return self

    @property
    def context(self) -> WaveContext:
        """Degenerate signal/idler wave parameters for the pump."""
        return WaveContext.degenerate(self.pump.wavelength)

    @property
    def seed(self) -> int | None:
        return self.source.seed

    def arms(self) -> dict[str, ArmSpec]:
        return {"A": self.arm_a, "B": self.arm_b}

    def diverging_lenses(self) -> list[tuple[str, ThinLens]]:
        return [
            (name, elem)
            for name, arm in self.arms().items()
            for elem in arm.elements
            if isinstance(elem, ThinLens) and elem.f < 0
        ]
