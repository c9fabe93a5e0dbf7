import math

from pydantic import BaseModel, ConfigDict, model_validator
from scipy.constants import c as SPEED_OF_LIGHT

from validators import validate_radar_params


class RadarParams(BaseModel):
    """Параметры FMCW-развёртки: начальная частота, полоса и число отсчётов волнового числа."""
    model_config = ConfigDict(frozen=True)

    f0: float
    bandwidth: float
    num_k: int
    c: float = SPEED_OF_LIGHT

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_radar_params(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self

    @property
    def k_min(self) -> float:
        return 2 * math.pi * self.f0 / self.c

    @property
    def k_max(self) -> float:
        return 2 * math.pi * (self.f0 + self.bandwidth) / self.c

    @property
    def delta_k(self) -> float:
        # при одном отсчёте шаг не определён
        if self.num_k < 2:
            return 0.0
        return (self.k_max - self.k_min) / (self.num_k - 1)

    @property
    def wavelength_min(self) -> float:
        return 2 * math.pi / self.k_max

    @property
    def wavelength_center(self) -> float:
        return self.c / (self.f0 + self.bandwidth / 2)
