from __future__ import annotations

import enum
import math
from typing import Annotated
from typing import Literal

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import PositiveFloat
from pydantic import field_validator
from pydantic import model_validator

from qimsim.grid import Axis
from qimsim.optics.masks import MaskProfile

FROZEN = ConfigDict(frozen=True, extra="forbid")


class FreeSpace(BaseModel):
    model_config = FROZEN

    kind: Literal["free"] = "free"
    d: PositiveFloat


class ThinLens(BaseModel):
    model_config = FROZEN

    kind: Literal["lens"] = "lens"
    f: float

    @field_validator("f")
    @classmethod
    def focal_length_nonzero(cls, v: float) -> float:
        if v == 0 or not math.isfinite(v):
            raise ValueError("focal length must be nonzero and finite")
        return v


class Mask(BaseModel):
    model_config = FROZEN

    kind: Literal["mask"] = "mask"
    profile: MaskProfile


class GaussianPupil(BaseModel):
    """Lens aperture with amplitude exp(-x^2 / (2 A))."""

    model_config = FROZEN

    kind: Literal["pupil"] = "pupil"
    A: PositiveFloat  # noqa: N815


Element = Annotated[
    FreeSpace | ThinLens | Mask | GaussianPupil, Field(discriminator="kind")
]


class BucketMode(str, enum.Enum):
    INTENSITY = "intensity"
    AMPLITUDE = "amplitude"


class PointArray(BaseModel):
    """Scanning point detector sampled on its own midpoint axis."""

    model_config = FROZEN

    kind: Literal["array"] = "array"
    x_min: float
    x_max: float
    n: int = Field(ge=2)

    @model_validator(mode="after")
    def bounds_ordered(self) -> PointArray:
        if self.x_max <= self.x_min:
            raise ValueError("detector array requires max > min")
        return self

    @property
    def axis(self) -> Axis:
        return Axis(self.x_min, self.x_max, self.n)


class Bucket(BaseModel):
    """Detector integrating its whole plane; the field is kept on the arm grid."""

    model_config = FROZEN

    kind: Literal["bucket"] = "bucket"
    mode: BucketMode = BucketMode.INTENSITY


class FarFieldPoint(BaseModel):
    """Point detector that only collects the zero transverse wavenumber."""

    model_config = FROZEN

    kind: Literal["farfield_point"] = "farfield_point"


DetectorSpec = Annotated[
    PointArray | Bucket | FarFieldPoint, Field(discriminator="kind")
]


class ArmSpec(BaseModel):
    """Ordered optical elements followed by exactly one detector."""

    model_config = FROZEN

    elements: tuple[Element, ...] = ()
    detector: DetectorSpec

    def first_mask(self) -> Mask | None:
        return next((e for e in self.elements if isinstance(e, Mask)), None)
