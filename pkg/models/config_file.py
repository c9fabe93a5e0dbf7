from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RadarSection(_Section):
    f0_hz: float
    bandwidth_hz: float
    num_k: int
    c_m_per_s: Optional[float] = None


class ApertureSection(_Section):
    r0_m: float
    num_theta: int
    theta_max_deg: float = 360.0
    num_y: int
    delta_y_m: float
    tx_offsets_m: List[float] = [0.0]
    rx_offsets_m: List[float] = [0.0]


class PointSection(_Section):
    x_m: float
    y_m: float
    z_m: float
    amplitude_re: float = 1.0
    amplitude_im: float = 0.0


class SceneSection(_Section):
    points: List[PointSection] = []
    target_radius_m: float
    target_height_m: float = 0.0


class OptionsSection(_Section):
    include_amplitude: bool = True
    zero_pad_y: int = 1
    window: Literal["none", "hann"] = "none"
    output_dims: List[int] = [64, 64, 64]
    output_extent_m: Optional[List[float]] = None
    db_floor: float = -40.0


class ConfigFile(_Section):
    """Структура конфигурационного файла, ключи с суффиксами единиц измерения."""
    radar: RadarSection
    aperture: ApertureSection
    scene: SceneSection
    options: OptionsSection = OptionsSection()
