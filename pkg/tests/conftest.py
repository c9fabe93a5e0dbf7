"""
Общие параметры для тестов.

Игрушечная конфигурация: полоса 1-3 ГГц и c = 3e8 м/с, поэтому критерии
дискретизации выполняются при небольших размерах массивов.
"""
from pathlib import Path

import numpy as np
import pytest

from models import ApertureConfig, RadarParams, ReconOptions, Scene, ScenePoint, SimOptions

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# длина волны на 79 ГГц
TABLE1_WAVELENGTH = 299792458 / 79e9


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def toy_radar() -> RadarParams:
    return RadarParams(f0=1e9, bandwidth=2e9, num_k=16, c=3e8)


@pytest.fixture
def toy_siso() -> ApertureConfig:
    return ApertureConfig(r0=0.5, num_theta=128, num_y=16, delta_y=0.025)


@pytest.fixture
def toy_mimo() -> ApertureConfig:
    # 2 x 4 элемента дают 8 виртуальных позиций с шагом 0.04 в каждом захвате
    return ApertureConfig(
        r0=2.0,
        num_theta=320,
        num_y=4,
        delta_y=0.32,
        tx_offsets=(-0.14, 0.18),
        rx_offsets=(-0.14, -0.06, 0.02, 0.10),
    )


@pytest.fixture
def toy_recon() -> ReconOptions:
    return ReconOptions(output_dims=(32, 5, 32), output_extent=(0.3, 0.2, 0.3))


@pytest.fixture
def no_amplitude() -> SimOptions:
    return SimOptions(include_amplitude=False)


@pytest.fixture
def table1_radar() -> RadarParams:
    return RadarParams(f0=77e9, bandwidth=4e9, num_k=64)


@pytest.fixture
def table1_mimo() -> ApertureConfig:
    lam = TABLE1_WAVELENGTH
    return ApertureConfig(
        r0=0.25,
        num_theta=10000,
        num_y=64,
        delta_y=2 * lam,
        tx_offsets=(-0.875 * lam, 1.125 * lam),
        rx_offsets=(-0.875 * lam, -0.375 * lam, 0.125 * lam, 0.625 * lam),
    )


def point_scene(*points, target_radius: float = 0.2, target_height: float = 0.2) -> Scene:
    return Scene(
        points=[ScenePoint(x=p[0], y=p[1], z=p[2]) for p in points],
        target_radius=target_radius,
        target_height=target_height,
    )


def peak_index(data: np.ndarray):
    return np.unravel_index(np.argmax(np.abs(data)), data.shape)
