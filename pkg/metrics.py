import math
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.ndimage import maximum_filter

from errors import GeometryError, MetricsError
from models import ApertureConfig, ImageVolume, RadarParams, Scene
from resolution import resolution_radial, resolution_vertical

# ширина защитной зоны в элементах разрешения
GUARD_CELLS = 2


class PointMetrics(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    truth: Tuple[float, float, float]
    peak_index: Tuple[int, int, int] | None
    peak_position: Tuple[float, float, float] | None
    offset_voxels: Tuple[float, float, float] | None
    position_error: float
    peak_db: float


class MetricsReport(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    points: List[PointMetrics]
    guard_voxels: Tuple[int, int, int]
    sidelobe_db: float

    @property
    def max_position_error(self) -> float:
        return max((p.position_error for p in self.points), default=0.0)

    def __str__(self):
        lines = [f"  Максимальный боковой лепесток: {self.sidelobe_db:.2f} дБ"]
        for i, p in enumerate(self.points):
            lines.append(
                f"  Точка {i} {tuple(round(c, 6) for c in p.truth)}: "
                f"ошибка {p.position_error:.3f} вокс., уровень {p.peak_db:.2f} дБ"
            )
        return "\n".join(lines) + "\n"


def guard_band(volume: ImageVolume, params: RadarParams, cfg: ApertureConfig,
               cells: int = GUARD_CELLS) -> Tuple[int, int, int]:
    """Полуширина защитной зоны в вокселях: cells элементов разрешения (δ_R, δ_y, δ_R) по осям."""
    try:
        vertical = resolution_vertical(params, cfg)
    except GeometryError:
        # одна виртуальная позиция: разрешения по y нет
        vertical = 0.0
    cell = (resolution_radial(params), vertical, resolution_radial(params))
    return tuple(int(math.ceil(cells * c / p)) for c, p in zip(cell, volume.voxel_pitch))


def _box(index, guard, shape) -> Tuple[slice, slice, slice]:
    return tuple(slice(max(i - g, 0), min(i + g + 1, n)) for i, g, n in zip(index, guard, shape))


def peak_metrics(volume: ImageVolume, truth: Scene, params: RadarParams, cfg: ApertureConfig,
                 cells: int = GUARD_CELLS) -> MetricsReport:
    """
    Для каждой точки сцены ищет пик |volume|: сильнейший локальный максимум в защитной зоне,
    а если его нет, ближайший локальный максимум. Боковой лепесток: максимум вне всех
    защитных зон относительно самого слабого из найденных пиков.
    """
    errors = []
    for i, point in enumerate(truth.points):
        if not volume.contains((point.x, point.y, point.z)):
            errors.append(f"scene.points[{i}]: точка ({point.x}, {point.y}, {point.z}) вне объёма изображения")
    if errors:
        raise MetricsError("; ".join(errors))

    magnitude = np.abs(volume.data)
    global_max = magnitude.max()
    maxima = (magnitude == maximum_filter(magnitude, size=3, mode="constant", cval=0.0)) & (magnitude > 0)
    maxima_idx = np.argwhere(maxima)

    guard = guard_band(volume, params, cfg, cells)
    outside = np.ones(magnitude.shape, dtype=bool)
    results = []

    for point in truth.points:
        position = (point.x, point.y, point.z)
        center = volume.nearest_index(position)
        box = _box(center, guard, magnitude.shape)
        outside[box] = False

        peak = None
        if maxima_idx.size:
            low = np.array([s.start for s in box])
            high = np.array([s.stop for s in box])
            inside = np.all((maxima_idx >= low) & (maxima_idx < high), axis=1)
            if inside.any():
                candidates = maxima_idx[inside]
                peak = candidates[np.argmax(magnitude[tuple(candidates.T)])]
            else:
                distance = np.max(np.abs(maxima_idx - np.array(center)), axis=1)
                peak = maxima_idx[np.argmin(distance)]

        if peak is None:
            results.append(PointMetrics(truth=position, peak_index=None, peak_position=None, offset_voxels=None,
                                        position_error=math.inf, peak_db=-math.inf))
            continue

        peak_position = volume.position(peak)
        offset = tuple((peak_position[i] - position[i]) / volume.voxel_pitch[i] for i in range(3))
        results.append(PointMetrics(
            truth=position,
            peak_index=tuple(int(i) for i in peak),
            peak_position=peak_position,
            offset_voxels=offset,
            position_error=max(abs(o) for o in offset),
            peak_db=20 * math.log10(magnitude[tuple(peak)] / global_max),
        ))

    sidelobe_db = -math.inf
    peaks = [magnitude[p.peak_index] for p in results if p.peak_index is not None]
    if peaks and outside.any():
        side = magnitude[outside].max()
        weakest = min(peaks)
        if side > 0:
            sidelobe_db = 20 * math.log10(side / weakest)

    return MetricsReport(points=results, guard_voxels=guard, sidelobe_db=sidelobe_db)
