from typing import Dict, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from validators import validate_image_volume


class VoxelGrid(BaseModel):
    """Равномерная декартова сетка вокселей [x][y][z]."""
    model_config = ConfigDict(frozen=True)

    dims: Tuple[int, int, int]
    origin: Tuple[float, float, float]
    pitch: Tuple[float, float, float]

    @classmethod
    def from_extent(cls, dims: Sequence[int], extent: Sequence[float]) -> "VoxelGrid":
        """
        Сетка с полуширинами extent: шаг 2·extent/N, начало −(N//2)·шаг,
        так что точка 0 всегда совпадает с узлом.
        """
        pitch = tuple(2.0 * e / n for n, e in zip(dims, extent))
        origin = tuple(-(n // 2) * p for n, p in zip(dims, pitch))
        return cls(dims=tuple(int(n) for n in dims), origin=origin, pitch=pitch)

    def axis(self, i: int) -> np.ndarray:
        return self.origin[i] + np.arange(self.dims[i]) * self.pitch[i]

    def axes(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.axis(0), self.axis(1), self.axis(2)


class ImageVolume(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    data: np.ndarray
    origin: Tuple[float, float, float]
    voxel_pitch: Tuple[float, float, float]
    provenance: Dict[str, str] = {}

    @model_validator(mode="after")
    def _check(self):
        errors = []
        validate_image_volume(self, errors)
        if errors:
            raise ValueError("; ".join(errors))
        return self

    @property
    def grid(self) -> VoxelGrid:
        return VoxelGrid(dims=self.data.shape, origin=self.origin, pitch=self.voxel_pitch)

    def axis(self, i: int) -> np.ndarray:
        return self.grid.axis(i)

    def contains(self, point: Sequence[float]) -> bool:
        # допускаем полвокселя за крайними узлами
        for i in range(3):
            low = self.origin[i] - self.voxel_pitch[i] / 2
            high = self.origin[i] + (self.data.shape[i] - 0.5) * self.voxel_pitch[i]
            if not low <= point[i] <= high:
                return False
        return True

    def nearest_index(self, point: Sequence[float]) -> Tuple[int, int, int]:
        index = []
        for i in range(3):
            j = int(round((point[i] - self.origin[i]) / self.voxel_pitch[i]))
            index.append(min(max(j, 0), self.data.shape[i] - 1))
        return tuple(index)

    def position(self, index: Sequence[int]) -> Tuple[float, float, float]:
        return tuple(self.origin[i] + index[i] * self.voxel_pitch[i] for i in range(3))
