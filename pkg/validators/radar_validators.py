from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models import RadarParams


def validate_radar_params(params: RadarParams, errors: list):
    if not params.f0 > 0:
        errors.append(f"radar.f0_hz: начальная частота должна быть > 0, получено {params.f0}")

    if not params.bandwidth >= 0:
        errors.append(f"radar.bandwidth_hz: полоса не может быть отрицательной, получено {params.bandwidth}")

    if params.num_k < 1:
        errors.append(f"radar.num_k: нужен хотя бы один отсчёт волнового числа, получено {params.num_k}")
    elif params.num_k == 1 and params.bandwidth != 0:
        # один отсчёт описывает только вырожденную (нулевую) полосу
        errors.append(
            f"radar.num_k: при num_k = 1 полоса должна быть нулевой, а radar.bandwidth_hz = {params.bandwidth}"
        )

    if not params.c > 0:
        errors.append(f"radar.c_m_per_s: скорость распространения должна быть > 0, получено {params.c}")
