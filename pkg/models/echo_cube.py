from typing import Dict, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_echo_cube


class EchoCube(BaseModel):
    """
    Комплексные отсчёты эха.

    monostatic: data[θ][k][y], y - высоты (виртуальных) элементов.
    multistatic: data[θ][k][захват][tx][rx], y - высоты захватов,
    реальные высоты элементов y + tx_offsets и y + rx_offsets.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["multistatic", "monostatic"]
    data: np.ndarray
    theta: np.ndarray
    k: np.ndarray
    y: np.ndarray
    tx_offsets: Optional[np.ndarray] = None
    rx_offsets: Optional[np.ndarray] = None
    provenance: Dict[str, str] = {}

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_echo_cube(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self
