import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from errors import GeometryError
from models import ApertureConfig, EchoCube, ImageVolume, RadarParams, VoxelGrid
from utils import resolve_threads

log = logging.getLogger(__name__)

# вокселей в одной задаче пула; не зависит от числа потоков
VOXEL_CHUNK = 256


def _element_heights(echo: EchoCube):
    if echo.kind == "monostatic":
        return echo.y, echo.y
    shape = echo.data.shape[2:]
    tx_y = np.broadcast_to(echo.y[:, None, None] + echo.tx_offsets[None, :, None], shape).ravel()
    rx_y = np.broadcast_to(echo.y[:, None, None] + echo.rx_offsets[None, None, :], shape).ravel()
    return tx_y, rx_y


def _backproject_chunk(voxels, samples, theta, k, tx_y, rx_y, r0, same) -> np.ndarray:
    n_voxels = len(voxels)
    acc = np.zeros(n_voxels, dtype=np.complex128)
    for i, angle in enumerate(theta):
        ax, az = r0 * np.cos(angle), r0 * np.sin(angle)
        dx = ax - voxels[:, 0:1]
        dz = az - voxels[:, 2:3]
        rt = np.sqrt(dx * dx + (tx_y[None, :] - voxels[:, 1:2]) ** 2 + dz * dz)
        rr = rt if same else np.sqrt(dx * dx + (rx_y[None, :] - voxels[:, 1:2]) ** 2 + dz * dz)
        path = rt + rr
        terms = samples[i][None, :, :] * np.exp(-1j * k[None, :, None] * path[:, None, :])
        # порядок суммирования (k, элемент) фиксирован для каждого вокселя
        acc += np.sum(terms.reshape(n_voxels, -1), axis=1)
    return acc


def backproject(echo: EchoCube, cfg: ApertureConfig, params: RadarParams, grid: VoxelGrid,
                threads: Optional[int] = None) -> ImageVolume:
    """
    Прямое обратное проецирование: для каждого вокселя сумма по всем отсчётам
    sample·e^{−jk(R_T + R_R)} (для моностатического куба e^{−j2kR}).

    Медленный эталон для проверки быстрого алгоритма.
    """
    if len(echo.k) != params.num_k or len(echo.theta) != cfg.num_theta:
        raise GeometryError(
            f"оси куба ({len(echo.theta)} углов, {len(echo.k)} частот) не совпадают с "
            f"aperture.num_theta = {cfg.num_theta} и radar.num_k = {params.num_k}"
        )
    started = time.perf_counter()
    tx_y, rx_y = _element_heights(echo)
    same = echo.kind == "monostatic"
    samples = echo.data.reshape(len(echo.theta), len(echo.k), -1)

    xs, ys, zs = grid.axes()
    voxels = np.stack(np.meshgrid(xs, ys, zs, indexing="ij"), axis=-1).reshape(-1, 3)
    starts = range(0, len(voxels), VOXEL_CHUNK)

    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as executor:
        parts = list(executor.map(
            lambda s: _backproject_chunk(voxels[s:s + VOXEL_CHUNK], samples, echo.theta, echo.k,
                                         tx_y, rx_y, cfg.r0, same),
            starts,
        ))

    data = np.concatenate(parts).reshape(grid.dims)
    log.info("Обратное проецирование %s -> %s за %.2f с", echo.data.shape, grid.dims,
             time.perf_counter() - started)
    return ImageVolume(
        data=data,
        origin=grid.origin,
        voxel_pitch=grid.pitch,
        provenance={"operation": "backproject", "source": echo.provenance.get("operation", "")},
    )
