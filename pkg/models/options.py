from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_recon_options


class SimOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    # деление на R_T·R_R (сферическое затухание)
    include_amplitude: bool = True


class ReconOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    zero_pad_y: int = 1
    window: Literal["none", "hann"] = "none"
    output_dims: Tuple[int, int, int] = (64, 64, 64)
    output_extent: Tuple[float, float, float]

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_recon_options(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self
