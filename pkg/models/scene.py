from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_scene


class ScenePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    z: float
    amplitude_re: float = 1.0
    amplitude_im: float = 0.0

    @property
    def amplitude(self) -> complex:
        return complex(self.amplitude_re, self.amplitude_im)


class Scene(BaseModel):
    """Набор идеальных точечных отражателей и границы цели (радиус R_T и высота D_y^T)."""
    model_config = ConfigDict(frozen=True)

    points: List[ScenePoint] = []
    target_radius: float
    target_height: float = 0.0

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_scene(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self

    def positions(self) -> np.ndarray:
        if not self.points:
            return np.zeros((0, 3))
        return np.array([[p.x, p.y, p.z] for p in self.points], dtype=float)

    def amplitudes(self) -> np.ndarray:
        return np.array([p.amplitude for p in self.points], dtype=complex)

    def scaled(self, factor: complex) -> "Scene":
        points = [
            p.model_copy(update={"amplitude_re": (p.amplitude * factor).real,
                                 "amplitude_im": (p.amplitude * factor).imag})
            for p in self.points
        ]
        return self.model_copy(update={"points": points})
