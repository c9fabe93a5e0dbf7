import math
from typing import List

from pydantic import BaseModel, ConfigDict

from errors import ConfigError
from geometry import build_virtual_aperture
from models import ApertureConfig, RadarParams


def _fmt(value: float) -> str:
    return "∞" if math.isinf(value) else f"{value:.6g}"


class SamplingReport(BaseModel):
    """Пределы шагов дискретизации по k, y и θ, фактические шаги и результат сравнения."""
    model_config = ConfigDict(ser_json_inf_nan="constants")

    dk_limit: float
    dy_limit: float
    dtheta_limit: float
    dk_actual: float
    dy_actual: float
    dtheta_actual: float
    dk_pass: bool
    dy_pass: bool
    dtheta_pass: bool
    errors: List[str]

    @property
    def success(self) -> bool:
        return self.dk_pass and self.dy_pass and self.dtheta_pass

    def __str__(self):
        e = "нет" if len(self.errors) == 0 else "\n\t\t ".join(self.errors)
        return (
            f"  Проверка пройдена: {self.success}\n"
            f"  Δk: {_fmt(self.dk_actual)} рад/м (предел {_fmt(self.dk_limit)}) - {'да' if self.dk_pass else 'нет'}\n"
            f"  Δy: {_fmt(self.dy_actual)} м (предел {_fmt(self.dy_limit)}) - {'да' if self.dy_pass else 'нет'}\n"
            f"  Δθ: {_fmt(self.dtheta_actual)} рад (предел {_fmt(self.dtheta_limit)}) - "
            f"{'да' if self.dtheta_pass else 'нет'}\n"
            f"  Ошибки:\n\t\t {e}\n"
        )


def sampling_limits(params: RadarParams, r0: float, aperture_span: float,
                    target_radius: float, target_height: float) -> tuple[float, float, float]:
    """
    Пределы шагов дискретизации:
        Δk < π/(2R_T),
        Δy < λ_min·√(D²/4 + R0²)/(2D), D = D_y^S + D_y^T,
        Δθ < π·√(R0² + R_T²)/(2·k_max·R0·R_T).
    При R_T = 0 (и D = 0) предел бесконечен.
    """
    if target_radius > 0:
        dk_limit = math.pi / (2 * target_radius)
        dtheta_limit = math.pi * math.hypot(r0, target_radius) / (2 * params.k_max * r0 * target_radius)
    else:
        dk_limit = math.inf
        dtheta_limit = math.inf

    d = aperture_span + target_height
    if d > 0:
        dy_limit = params.wavelength_min * math.sqrt(d * d / 4 + r0 * r0) / (2 * d)
    else:
        dy_limit = math.inf
    return dk_limit, dy_limit, dtheta_limit


def check_sampling(params: RadarParams, cfg: ApertureConfig, target_radius: float,
                   target_height: float) -> SamplingReport:
    errors = []
    if target_radius < 0:
        errors.append(f"scene.target_radius_m: радиус цели не может быть отрицательным, получено {target_radius}")
    if target_height < 0:
        errors.append(f"scene.target_height_m: высота цели не может быть отрицательной, получено {target_height}")
    if errors:
        raise ConfigError(errors)

    aperture = build_virtual_aperture(cfg)
    dk_limit, dy_limit, dtheta_limit = sampling_limits(
        params, cfg.r0, aperture.span, target_radius, target_height
    )

    result = SamplingReport(
        dk_limit=dk_limit,
        dy_limit=dy_limit,
        dtheta_limit=dtheta_limit,
        dk_actual=params.delta_k,
        dy_actual=aperture.spacing,
        dtheta_actual=cfg.delta_theta,
        dk_pass=params.delta_k < dk_limit,
        dy_pass=aperture.spacing < dy_limit,
        dtheta_pass=cfg.delta_theta < dtheta_limit,
        errors=[],
    )

    if not result.dk_pass:
        result.errors.append(f"шаг по волновому числу {result.dk_actual:.6g} рад/м не меньше {dk_limit:.6g}")
    if not result.dy_pass:
        result.errors.append(f"шаг виртуальной решётки {result.dy_actual:.6g} м не меньше {dy_limit:.6g}")
    if not result.dtheta_pass:
        result.errors.append(f"шаг по углу {result.dtheta_actual:.6g} рад не меньше {dtheta_limit:.6g}")
    return result
