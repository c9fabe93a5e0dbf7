from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from models import EchoCube, ImageVolume, SpectrumGrid

# какие оси ожидаются на каждом этапе восстановления
STAGE_AXES = {
    "spectrum_theta_k_ky": ("Theta", "k", "k_y"),
    "polar_spectrum": ("theta", "k", "k_y"),
    "cartesian_spectrum": ("k_x", "k_y", "k_z"),
}


def is_uniform(values: np.ndarray, rtol: float = 1e-6) -> bool:
    """Проверяет, что отсчёты образуют равномерную возрастающую сетку."""
    values = np.asarray(values, dtype=float)
    if values.ndim != 1:
        return False
    if values.size < 3:
        return values.size < 2 or values[1] > values[0]
    steps = np.diff(values)
    step = steps.mean()
    if not step > 0:
        return False
    return bool(np.all(np.abs(steps - step) <= rtol * abs(step) + 1e-12))


def validate_echo_cube(cube: EchoCube, errors: list):
    shape = cube.data.shape
    n_theta, n_k, n_y = len(cube.theta), len(cube.k), len(cube.y)

    if cube.kind == "multistatic":
        if cube.tx_offsets is None or cube.rx_offsets is None:
            errors.append("echo.tx_offsets/rx_offsets: у мультистатического куба должны быть смещения элементов")
            return
        expected = (n_theta, n_k, n_y, len(cube.tx_offsets), len(cube.rx_offsets))
    else:
        expected = (n_theta, n_k, n_y)

    if shape != expected:
        errors.append(f"echo.data: размеры {shape} не совпадают с осями {expected}")

    if not is_uniform(cube.theta):
        errors.append("echo.theta: сетка углов должна быть равномерной")

    if not is_uniform(cube.k):
        errors.append("echo.k: сетка волновых чисел должна быть равномерной")

    if cube.kind == "monostatic" and not is_uniform(cube.y):
        errors.append("echo.y: у моностатического куба сетка по вертикали должна быть равномерной")


def validate_spectrum_grid(grid: SpectrumGrid, errors: list):
    names = tuple(axis.name for axis in grid.axes)
    expected = STAGE_AXES.get(grid.stage)
    if expected is None:
        errors.append(f"spectrum.stage: неизвестный этап {grid.stage!r}")
    elif names != expected:
        errors.append(f"spectrum.axes: этапу {grid.stage} соответствуют оси {expected}, получено {names}")

    lengths = tuple(len(axis.values) for axis in grid.axes)
    if grid.data.shape != lengths:
        errors.append(f"spectrum.data: размеры {grid.data.shape} не совпадают с осями {lengths}")


def validate_image_volume(volume: ImageVolume, errors: list):
    if volume.data.ndim != 3 or any(n < 1 for n in volume.data.shape):
        errors.append(f"volume.data: нужен трёхмерный массив с размерами >= 1, получено {volume.data.shape}")

    if len(volume.origin) != 3:
        errors.append(f"volume.origin: нужны три координаты, получено {volume.origin}")

    if len(volume.voxel_pitch) != 3 or any(not p > 0 for p in volume.voxel_pitch):
        errors.append(f"volume.voxel_pitch: все шаги должны быть > 0, получено {volume.voxel_pitch}")
