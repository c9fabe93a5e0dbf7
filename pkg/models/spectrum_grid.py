from typing import Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_spectrum_grid


class AxisDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    unit: str
    values: np.ndarray


class SpectrumGrid(BaseModel):
    """Промежуточный спектр восстановления с описанием области каждой оси."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    stage: str
    data: np.ndarray
    axes: Tuple[AxisDescriptor, ...]
    provenance: Dict[str, str] = {}

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_spectrum_grid(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self

    def axis(self, name: str) -> np.ndarray:
        for descriptor in self.axes:
            if descriptor.name == name:
                return descriptor.values
        raise KeyError(name)
