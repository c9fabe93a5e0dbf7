from .radar_params import RadarParams
from .aperture import ApertureConfig
from .scene import Scene, ScenePoint
from .options import SimOptions, ReconOptions
from .echo_cube import EchoCube
from .spectrum_grid import AxisDescriptor, SpectrumGrid
from .image_volume import ImageVolume, VoxelGrid
from .config_file import ConfigFile
