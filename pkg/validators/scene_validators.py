from __future__ import annotations

import math
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models import ApertureConfig, Scene

_RADIUS_TOLERANCE = 1e-12


def validate_scene(scene: Scene, errors: list):
    if not scene.target_radius >= 0:
        errors.append(f"scene.target_radius_m: радиус цели не может быть отрицательным, получено {scene.target_radius}")

    if not scene.target_height >= 0:
        errors.append(f"scene.target_height_m: высота цели не может быть отрицательной, получено {scene.target_height}")

    for i, point in enumerate(scene.points):
        radius = math.hypot(point.x, point.z)
        if radius > scene.target_radius + _RADIUS_TOLERANCE:
            errors.append(
                f"scene.points[{i}]: горизонтальный радиус точки {radius:.6f} м "
                f"больше scene.target_radius_m = {scene.target_radius}"
            )


def validate_scene_in_aperture(scene: Scene, cfg: ApertureConfig, errors: list):
    # цель должна целиком лежать внутри окружности сканирования
    if scene.target_radius >= cfg.r0:
        errors.append(
            f"scene.target_radius_m: радиус цели {scene.target_radius} должен быть меньше aperture.r0_m = {cfg.r0}"
        )
