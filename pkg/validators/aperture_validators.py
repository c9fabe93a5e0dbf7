from __future__ import annotations

import math
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models import ApertureConfig

# допуск на пересчёт градусов в радианы
_TWO_PI_TOLERANCE = 1e-9


def validate_aperture(cfg: ApertureConfig, errors: list):
    if not cfg.r0 > 0:
        errors.append(f"aperture.r0_m: радиус сканирования должен быть > 0, получено {cfg.r0}")

    if cfg.num_theta < 1:
        errors.append(f"aperture.num_theta: нужен хотя бы один угол поворота, получено {cfg.num_theta}")

    if not 0 < cfg.theta_max <= 2 * math.pi + _TWO_PI_TOLERANCE:
        errors.append(
            f"aperture.theta_max_deg: сектор поворота должен лежать в (0, 360] градусов, "
            f"получено {math.degrees(cfg.theta_max):.6f}"
        )

    if cfg.num_y < 1:
        errors.append(f"aperture.num_y: нужна хотя бы одна вертикальная позиция, получено {cfg.num_y}")

    if not cfg.delta_y > 0:
        errors.append(f"aperture.delta_y_m: шаг по вертикали должен быть > 0, получено {cfg.delta_y}")

    if len(cfg.tx_offsets) == 0:
        errors.append("aperture.tx_offsets_m: список передатчиков пуст")

    if len(cfg.rx_offsets) == 0:
        errors.append("aperture.rx_offsets_m: список приёмников пуст")
