import logging
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from errors import GeometryError
from models import ApertureConfig, RadarParams

log = logging.getLogger(__name__)

# допуск совпадения и равномерности виртуальных позиций, м
POSITION_TOLERANCE = 1e-6


def wavenumber_grid(params: RadarParams) -> np.ndarray:
    """Равномерная сетка k = 2πf/c от f0 до f0 + B включительно."""
    return np.linspace(params.k_min, params.k_max, params.num_k)


def virtual_elements(cfg: ApertureConfig) -> List[Tuple[float, float]]:
    """
    Виртуальные элементы пар (tx, rx) в порядке строк по (tx, rx).

    Returns:
        List[Tuple[float, float]]: (высота середины пары, разнос d_y)
    """
    return [
        ((tx + rx) / 2, abs(tx - rx))
        for tx in cfg.tx_offsets
        for rx in cfg.rx_offsets
    ]


class VirtualAperture(BaseModel):
    """Виртуальная моностатическая решётка, собранная из всех захватов."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    positions: np.ndarray
    # index[захват, tx, rx] -> номер позиции в positions
    index: np.ndarray
    separations: np.ndarray
    spacing: float
    duplicates: int

    @property
    def span(self) -> float:
        """Длина виртуальной апертуры D_y^S."""
        return (len(self.positions) - 1) * self.spacing


def build_virtual_aperture(cfg: ApertureConfig, tolerance: float = POSITION_TOLERANCE) -> VirtualAperture:
    tx = np.asarray(cfg.tx_offsets, dtype=float)
    rx = np.asarray(cfg.rx_offsets, dtype=float)
    captures = cfg.capture_positions()

    raw = captures[:, None, None] + (tx[None, :, None] + rx[None, None, :]) / 2
    flat = raw.ravel()
    order = np.argsort(flat, kind="stable")

    # группируем позиции, отстоящие меньше чем на tolerance
    cluster_of = np.empty(flat.size, dtype=int)
    sums, counts = [], []
    for i, idx in enumerate(order):
        if i > 0 and flat[idx] - flat[order[i - 1]] <= tolerance:
            sums[-1] += flat[idx]
            counts[-1] += 1
        else:
            sums.append(flat[idx])
            counts.append(1)
        cluster_of[idx] = len(sums) - 1
    positions = np.array(sums) / np.array(counts)

    if len(positions) > 1:
        spacing = (positions[-1] - positions[0]) / (len(positions) - 1)
        gaps = np.diff(positions)
        bad = np.flatnonzero(np.abs(gaps - spacing) > tolerance)
        if bad.size:
            i = bad[0]
            raise GeometryError(
                f"виртуальная решётка неравномерна: зазор {gaps[i]:.9f} м между y = {positions[i]:.9f} "
                f"и y = {positions[i + 1]:.9f} при среднем шаге {spacing:.9f} м"
            )
    else:
        spacing = cfg.delta_y

    duplicates = flat.size - len(positions)
    if duplicates:
        log.warning("Совпадающих виртуальных позиций: %d, их отсчёты будут усреднены", duplicates)

    return VirtualAperture(
        positions=positions,
        index=cluster_of.reshape(raw.shape),
        separations=np.abs(tx[:, None] - rx[None, :]),
        spacing=float(spacing),
        duplicates=int(duplicates),
    )
