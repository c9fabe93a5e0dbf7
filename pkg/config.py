import logging
import math
from pathlib import Path
from typing import Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from errors import ConfigError
from models import ApertureConfig, ConfigFile, RadarParams, ReconOptions, Scene, ScenePoint, SimOptions
from utils import load_json
from validators import (validate_aperture, validate_radar_params, validate_recon_options, validate_scene,
                        validate_scene_in_aperture, validate_unit_suffixes)

log = logging.getLogger(__name__)

DEFAULT_DB_FLOOR = -40.0

_PYDANTIC_MESSAGES = {
    "missing": "обязательный ключ отсутствует",
    "extra_forbidden": "неизвестный ключ",
}


class RisarConfig(BaseModel):
    """Полный проверенный набор параметров моделирования и восстановления."""
    model_config = ConfigDict(frozen=True)

    radar: RadarParams
    aperture: ApertureConfig
    scene: Scene
    sim: SimOptions
    recon: ReconOptions
    db_floor: float = DEFAULT_DB_FLOOR

    def as_tuple(self) -> Tuple[RadarParams, ApertureConfig, Scene, SimOptions, ReconOptions]:
        return self.radar, self.aperture, self.scene, self.sim, self.recon


def _location(loc) -> str:
    text = ""
    for part in loc:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text


def _structure_errors(e: ValidationError, flagged: list) -> list:
    messages = []
    for error in e.errors():
        location = _location(error["loc"])
        if location.rsplit(".", 1)[-1] in flagged:
            continue
        messages.append(f"{location}: {_PYDANTIC_MESSAGES.get(error['type'], error['msg'])}")
    return messages


def build_config(raw: dict) -> RisarConfig:
    """Проверяет словарь конфигурации и собирает доменные модели; все ошибки собираются в один ConfigError."""
    errors = []
    flagged = validate_unit_suffixes(raw, errors)
    try:
        file = ConfigFile.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(errors + _structure_errors(e, flagged))
    if errors:
        raise ConfigError(errors)

    radar = RadarParams.model_construct(
        f0=file.radar.f0_hz,
        bandwidth=file.radar.bandwidth_hz,
        num_k=file.radar.num_k,
        **({"c": file.radar.c_m_per_s} if file.radar.c_m_per_s is not None else {}),
    )
    aperture = ApertureConfig.model_construct(
        r0=file.aperture.r0_m,
        num_theta=file.aperture.num_theta,
        theta_max=math.radians(file.aperture.theta_max_deg),
        num_y=file.aperture.num_y,
        delta_y=file.aperture.delta_y_m,
        tx_offsets=tuple(file.aperture.tx_offsets_m),
        rx_offsets=tuple(file.aperture.rx_offsets_m),
    )
    scene = Scene.model_construct(
        points=[
            ScenePoint(x=p.x_m, y=p.y_m, z=p.z_m, amplitude_re=p.amplitude_re, amplitude_im=p.amplitude_im)
            for p in file.scene.points
        ],
        target_radius=file.scene.target_radius_m,
        target_height=file.scene.target_height_m,
    )
    extent = file.options.output_extent_m
    if extent is None:
        height = file.scene.target_height_m / 2 if file.scene.target_height_m > 0 else file.scene.target_radius_m
        extent = [file.scene.target_radius_m, height, file.scene.target_radius_m]
    recon = ReconOptions.model_construct(
        zero_pad_y=file.options.zero_pad_y,
        window=file.options.window,
        output_dims=tuple(file.options.output_dims),
        output_extent=tuple(extent),
    )

    # те же проверки, что выполняют модели при создании, но с полным списком ошибок
    validate_radar_params(radar, errors)
    validate_aperture(aperture, errors)
    validate_scene(scene, errors)
    validate_scene_in_aperture(scene, aperture, errors)
    validate_recon_options(recon, errors)
    if not file.options.db_floor < 0:
        errors.append(f"options.db_floor: порог должен быть отрицательным, получено {file.options.db_floor}")
    if errors:
        raise ConfigError(errors)

    return RisarConfig(
        radar=RadarParams.model_validate(radar.model_dump()),
        aperture=ApertureConfig.model_validate(aperture.model_dump()),
        scene=Scene.model_validate(scene.model_dump()),
        sim=SimOptions(include_amplitude=file.options.include_amplitude),
        recon=ReconOptions.model_validate(recon.model_dump()),
        db_floor=file.options.db_floor,
    )


def parse_config(path: Union[str, Path]) -> RisarConfig:
    try:
        raw = load_json(path)
    except ValueError as e:
        raise ConfigError([f"{path}: файл не является корректным JSON: {e}"])
    if not isinstance(raw, dict):
        raise ConfigError([f"{path}: ожидается JSON-объект с разделами radar, aperture, scene"])
    config = build_config(raw)
    log.debug("Конфигурация %s: R0 = %s м, N_θ = %d, N_y = %d", path, config.aperture.r0,
              config.aperture.num_theta, config.aperture.num_y)
    return config
