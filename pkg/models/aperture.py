import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_aperture


class ApertureConfig(BaseModel):
    """
    Геометрия сканирования: окружность радиуса r0, сетка углов поворота
    и вертикальные захваты MIMO-решётки.

    Смещения tx/rx задаются относительно опорной высоты захвата.
    """
    model_config = ConfigDict(frozen=True)

    r0: float
    num_theta: int
    theta_max: float = 2 * math.pi
    num_y: int
    delta_y: float
    tx_offsets: Tuple[float, ...] = (0.0,)
    rx_offsets: Tuple[float, ...] = (0.0,)

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_aperture(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self

    @property
    def delta_theta(self) -> float:
        return self.theta_max / self.num_theta

    @property
    def full_rotation(self) -> bool:
        return math.isclose(self.theta_max, 2 * math.pi, rel_tol=1e-9)

    def theta_grid(self) -> np.ndarray:
        """Углы поворота θ_i = i·θ_max/N_θ, i = 0..N_θ−1."""
        return np.arange(self.num_theta) * self.delta_theta

    def capture_positions(self) -> np.ndarray:
        """Высоты захватов, отцентрованные относительно y = 0."""
        return (np.arange(self.num_y) - (self.num_y - 1) / 2) * self.delta_y

    def is_siso(self) -> bool:
        return self.tx_offsets == (0.0,) and self.rx_offsets == (0.0,)
