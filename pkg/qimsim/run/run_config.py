from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import NonNegativeInt
from pydantic import PositiveFloat
from pydantic import PositiveInt
from pydantic import field_validator

from qimsim.optics import BucketMode


class RunConfig(BaseModel):
    """
    One ``qimsim run`` invocation.

    Unset options fall back to the bench file, then to ``[tool.qimsim]``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    bench: str
    out: Path | None = None
    grid_n: int | None = Field(default=None, ge=64)
    p_max: PositiveFloat | None = None
    seed: NonNegativeInt | None = None
    bucket: BucketMode | None = None
    realizations: PositiveInt | None = None
    raw: bool | None = None
    allow_diverging: bool | None = None
    summary_format: Literal["json", "yaml"] | None = None
    overrides: tuple[str, ...] = ()

    @field_validator("overrides")
    @classmethod
    def overrides_are_assignments(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for item in v:
            key, sep, _ = item.partition("=")
            if not sep or not key.strip():
                raise ValueError(f"override '{item}' must look like KEY=VALUE")
        return v

    @field_validator("out")
    @classmethod
    def out_is_csv(cls, v: Path | None) -> Path | None:
        if v is not None and v.suffix.lower() != ".csv":
            raise ValueError(f"output '{v}' must be a .csv file")
        return v
