import math

import numpy as np
from pydantic import BaseModel
from scipy.optimize import brentq
from scipy.special import j1

from errors import GeometryError
from geometry import build_virtual_aperture
from models import ApertureConfig, RadarParams

# уровень половинной мощности для амплитудного изображения
HALF_POWER_DB = -3.0


def resolution_vertical(params: RadarParams, cfg: ApertureConfig) -> float:
    """δ_y ≈ λ_c·R0/(2·D_y^S), λ_c на центральной частоте развёртки."""
    span = build_virtual_aperture(cfg).span
    if not span > 0:
        raise GeometryError("вертикальное разрешение не определено: длина виртуальной апертуры равна нулю")
    return params.wavelength_center * cfg.r0 / (2 * span)


def resolution_radial(params: RadarParams) -> float:
    """δ_R = 2.4/(k_max + k_min)."""
    return 2.4 / (params.k_max + params.k_min)


def psf_analytic(r, params: RadarParams):
    """
    Аналитическая ФРТ в плоскости x-z:
    (k_max·J1(2·k_max·r) − k_min·J1(2·k_min·r))/(π·r), в нуле предел (k_max² − k_min²)/π.
    """
    r = np.asarray(r, dtype=float)
    k_min, k_max = params.k_min, params.k_max
    safe = np.where(r == 0, 1.0, r)
    value = (k_max * j1(2 * k_max * safe) - k_min * j1(2 * k_min * safe)) / (math.pi * safe)
    value = np.where(r == 0, (k_max ** 2 - k_min ** 2) / math.pi, value)
    return float(value) if value.ndim == 0 else value


def psf_first_null(params: RadarParams, samples: int = 4000) -> float:
    """Радиус первого нуля аналитической ФРТ: грубый поиск смены знака и уточнение brentq."""
    if params.k_max == params.k_min:
        return math.nan
    r = np.linspace(0, 10 / params.k_max, samples)[1:]
    values = psf_analytic(r, params)
    sign_change = np.flatnonzero(np.signbit(values[1:]) != np.signbit(values[:-1]))
    if sign_change.size == 0:
        return math.nan
    i = sign_change[0]
    return brentq(psf_analytic, r[i], r[i + 1], args=(params,), xtol=1e-15)


def psf_half_power_width(params: RadarParams, level_db: float = HALF_POWER_DB) -> float:
    """Полная ширина главного лепестка аналитической ФРТ на уровне level_db (20·lg по амплитуде)."""
    null = psf_first_null(params)
    if math.isnan(null):
        return math.nan
    peak = psf_analytic(0.0, params)
    level = peak * 10 ** (level_db / 20)
    return 2 * brentq(lambda r: psf_analytic(r, params) - level, 0.0, null, xtol=1e-15)


class ResolutionReport(BaseModel):
    vertical: float
    radial: float
    half_power_width: float
    first_null: float

    def __str__(self):
        return (
            f"  Вертикальное разрешение δ_y: {self.vertical * 1e3:.4f} мм\n"
            f"  Радиальное разрешение δ_R: {self.radial * 1e3:.4f} мм\n"
            f"  Ширина ФРТ по уровню -3 дБ: {self.half_power_width * 1e3:.4f} мм\n"
            f"  Первый ноль ФРТ: {self.first_null * 1e3:.4f} мм\n"
        )


def resolution_report(params: RadarParams, cfg: ApertureConfig) -> ResolutionReport:
    return ResolutionReport(
        vertical=resolution_vertical(params, cfg),
        radial=resolution_radial(params),
        half_power_width=psf_half_power_width(params),
        first_null=psf_first_null(params),
    )
