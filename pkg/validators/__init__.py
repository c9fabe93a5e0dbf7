from .radar_validators import validate_radar_params
from .aperture_validators import validate_aperture
from .scene_validators import validate_scene, validate_scene_in_aperture
from .options_validators import validate_recon_options
from .grid_validators import is_uniform, validate_echo_cube, validate_spectrum_grid, validate_image_volume
from .config_validators import validate_unit_suffixes

__all__ = [
    "validate_radar_params",
    "validate_aperture",
    "validate_scene",
    "validate_scene_in_aperture",
    "validate_recon_options",
    "is_uniform",
    "validate_echo_cube",
    "validate_spectrum_grid",
    "validate_image_volume",
    "validate_unit_suffixes",
]
