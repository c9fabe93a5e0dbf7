"""
Моделирование эха точечных отражателей при вращении цели.

Поворот цели на +θ моделируется размещением приёмопередатчика в точке
(R0·cosθ, y, R0·sinθ) окружности сканирования.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from errors import GeometryError
from geometry import wavenumber_grid
from models import ApertureConfig, EchoCube, RadarParams, Scene, SimOptions
from utils import options_hash, resolve_threads
from validators import validate_scene_in_aperture

log = logging.getLogger(__name__)

# число углов в одной задаче пула; не зависит от числа потоков
THETA_CHUNK = 32


def _ranges(theta: np.ndarray, element_y: np.ndarray, r0: float, point: np.ndarray) -> np.ndarray:
    dx = r0 * np.cos(theta)[:, None] - point[0]
    dz = r0 * np.sin(theta)[:, None] - point[2]
    dy = element_y[None, :] - point[1]
    return np.sqrt(dx * dx + dy * dy + dz * dz)


def _accumulate(theta, k, tx_y, rx_y, r0, positions, amplitudes, include_amplitude) -> np.ndarray:
    """Сумма по точкам для блока углов, результат [θ][k][элемент]."""
    out = np.zeros((len(theta), len(k), len(tx_y)), dtype=np.complex128)
    same = tx_y is rx_y
    # порядок суммирования по точкам фиксирован
    for point, amplitude in zip(positions, amplitudes):
        rt = _ranges(theta, tx_y, r0, point)
        rr = rt if same else _ranges(theta, rx_y, r0, point)
        if include_amplitude and (np.any(rt == 0) or np.any(rr == 0)):
            raise GeometryError(f"точка ({point[0]}, {point[1]}, {point[2]}) совпадает с положением антенны")
        path = rt + rr
        term = amplitude * np.exp(1j * k[None, :, None] * path[:, None, :])
        if include_amplitude:
            term = term / (rt * rr)[:, None, :]
        out += term
    return out


def _simulate(scene, cfg, params, opts, tx_y, rx_y, threads) -> np.ndarray:
    errors = []
    validate_scene_in_aperture(scene, cfg, errors)
    if errors:
        raise GeometryError("; ".join(errors))

    theta = cfg.theta_grid()
    k = wavenumber_grid(params)
    positions = scene.positions()
    amplitudes = scene.amplitudes()

    starts = range(0, len(theta), THETA_CHUNK)
    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as executor:
        blocks = list(executor.map(
            lambda s: _accumulate(theta[s:s + THETA_CHUNK], k, tx_y, rx_y, cfg.r0,
                                  positions, amplitudes, opts.include_amplitude),
            starts,
        ))
    return np.concatenate(blocks, axis=0) if blocks else np.zeros((0, len(k), len(tx_y)), dtype=np.complex128)


def simulate_mimo_echo(scene: Scene, cfg: ApertureConfig, params: RadarParams,
                       opts: SimOptions = SimOptions(), threads: Optional[int] = None) -> EchoCube:
    """
    Мультистатическое эхо: сумма amplitude·e^{jk(R_T+R_R)} по точкам сцены
    (с делением на R_T·R_R при include_amplitude).

    Returns:
        EchoCube: данные [θ][k][захват][tx][rx]
    """
    captures = cfg.capture_positions()
    tx = np.asarray(cfg.tx_offsets, dtype=float)
    rx = np.asarray(cfg.rx_offsets, dtype=float)
    shape = (len(captures), len(tx), len(rx))
    tx_y = np.broadcast_to(captures[:, None, None] + tx[None, :, None], shape).ravel()
    rx_y = np.broadcast_to(captures[:, None, None] + rx[None, None, :], shape).ravel()

    log.info("Моделирование MIMO-эха: %d точек, %d углов, %d частот, %d пар",
             len(scene.points), cfg.num_theta, params.num_k, tx_y.size)
    data = _simulate(scene, cfg, params, opts, tx_y, rx_y, threads)

    return EchoCube(
        kind="multistatic",
        data=data.reshape((cfg.num_theta, params.num_k) + shape),
        theta=cfg.theta_grid(),
        k=wavenumber_grid(params),
        y=captures,
        tx_offsets=tx,
        rx_offsets=rx,
        provenance={"operation": "simulate_mimo_echo", "options_hash": options_hash(opts)},
    )


def simulate_siso_echo(scene: Scene, cfg: ApertureConfig, params: RadarParams,
                       opts: SimOptions = SimOptions(), threads: Optional[int] = None) -> EchoCube:
    """Моностатическое эхо: сумма amplitude·e^{j2kR} в точках захвата, смещения tx/rx не учитываются."""
    captures = cfg.capture_positions()

    log.info("Моделирование SISO-эха: %d точек, %d углов, %d частот, %d высот",
             len(scene.points), cfg.num_theta, params.num_k, captures.size)
    data = _simulate(scene, cfg, params, opts, captures, captures, threads)

    return EchoCube(
        kind="monostatic",
        data=data,
        theta=cfg.theta_grid(),
        k=wavenumber_grid(params),
        y=captures,
        provenance={"operation": "simulate_siso_echo", "options_hash": options_hash(opts)},
    )
