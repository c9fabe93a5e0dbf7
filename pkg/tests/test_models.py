import math

import numpy as np
import pytest
from pydantic import ValidationError

from models import (ApertureConfig, AxisDescriptor, EchoCube, ImageVolume, RadarParams, ReconOptions, Scene,
                    ScenePoint, SpectrumGrid, VoxelGrid)


def test_radar_params_derived_values():
    params = RadarParams(f0=77e9, bandwidth=4e9, num_k=64)
    assert params.k_min == pytest.approx(1613.80, rel=1e-5)
    assert params.k_max == pytest.approx(1697.63, rel=1e-5)
    assert params.wavelength_min == pytest.approx(3.7012e-3, rel=1e-4)
    assert params.wavelength_center == pytest.approx(3.7948e-3, rel=1e-4)
    assert params.delta_k == pytest.approx((params.k_max - params.k_min) / 63)


@pytest.mark.parametrize("kwargs, field", [
    ({"f0": 0, "bandwidth": 1e9, "num_k": 4}, "radar.f0_hz"),
    ({"f0": 1e9, "bandwidth": -1, "num_k": 4}, "radar.bandwidth_hz"),
    ({"f0": 1e9, "bandwidth": 1e9, "num_k": 0}, "radar.num_k"),
    ({"f0": 1e9, "bandwidth": 1e9, "num_k": 1}, "radar.num_k"),
])
def test_radar_params_invariants(kwargs, field):
    with pytest.raises(ValidationError, match=field):
        RadarParams(**kwargs)


def test_aperture_invariants():
    with pytest.raises(ValidationError) as e:
        ApertureConfig(r0=-1, num_theta=0, theta_max=7.0, num_y=0, delta_y=0, tx_offsets=(), rx_offsets=())
    message = str(e.value)
    for field in ("aperture.r0_m", "aperture.num_theta", "aperture.theta_max_deg", "aperture.num_y",
                  "aperture.delta_y_m", "aperture.tx_offsets_m", "aperture.rx_offsets_m"):
        assert field in message


def test_aperture_grids():
    cfg = ApertureConfig(r0=0.25, num_theta=4, num_y=3, delta_y=0.01)
    assert cfg.theta_grid() == pytest.approx([0, math.pi / 2, math.pi, 3 * math.pi / 2])
    assert cfg.capture_positions() == pytest.approx([-0.01, 0.0, 0.01])
    assert cfg.full_rotation
    assert cfg.is_siso()


def test_scene_point_outside_target_radius():
    with pytest.raises(ValidationError, match=r"scene.points\[0\]"):
        Scene(points=[ScenePoint(x=0.2, y=0, z=0)], target_radius=0.1)


def test_scene_scaled_amplitudes():
    scene = Scene(points=[ScenePoint(x=0.01, y=0, z=0, amplitude_re=1, amplitude_im=2)], target_radius=0.1)
    assert scene.scaled(1j).amplitudes() == pytest.approx([-2 + 1j])


def test_recon_options_invariants():
    with pytest.raises(ValidationError, match="options.output_dims"):
        ReconOptions(output_dims=(0, 4, 4), output_extent=(0.1, 0.1, 0.1))
    with pytest.raises(ValidationError, match="options.output_extent_m"):
        ReconOptions(output_dims=(4, 4, 4), output_extent=(0.1, 0.0, 0.1))


def test_echo_cube_shape_must_match_axes():
    with pytest.raises(ValidationError, match="echo.data"):
        EchoCube(kind="monostatic", data=np.zeros((2, 2, 3), complex),
                 theta=np.array([0.0, 1.0]), k=np.array([1.0, 2.0]), y=np.array([0.0, 0.1]))


def test_echo_cube_axes_must_be_uniform():
    with pytest.raises(ValidationError, match="echo.k"):
        EchoCube(kind="monostatic", data=np.zeros((1, 3, 1), complex),
                 theta=np.array([0.0]), k=np.array([1.0, 2.0, 4.0]), y=np.array([0.0]))


def test_spectrum_grid_axes_must_match_stage():
    axes = tuple(AxisDescriptor(name=n, unit="rad/m", values=np.arange(2.0)) for n in ("k_x", "k_y", "k_z"))
    with pytest.raises(ValidationError, match="spectrum.axes"):
        SpectrumGrid(stage="polar_spectrum", data=np.zeros((2, 2, 2), complex), axes=axes)
    assert SpectrumGrid(stage="cartesian_spectrum", data=np.zeros((2, 2, 2), complex), axes=axes).axis("k_y")[1] == 1


def test_voxel_grid_places_zero_on_a_node():
    grid = VoxelGrid.from_extent((4, 1, 5), (0.2, 0.1, 0.25))
    assert grid.pitch == pytest.approx((0.1, 0.2, 0.1))
    assert grid.axis(0) == pytest.approx([-0.2, -0.1, 0.0, 0.1])
    assert grid.axis(1) == pytest.approx([0.0])
    assert grid.axis(2) == pytest.approx([-0.2, -0.1, 0.0, 0.1, 0.2])


def test_image_volume_lookup():
    volume = ImageVolume(data=np.zeros((4, 1, 5), complex), origin=(-0.2, 0.0, -0.2), voxel_pitch=(0.1, 0.2, 0.1))
    assert volume.contains((0.1, 0.0, 0.2))
    assert not volume.contains((0.3, 0.0, 0.0))
    assert volume.nearest_index((0.08, 0.01, -0.19)) == (3, 0, 0)
    assert volume.position((3, 0, 0)) == pytest.approx((0.1, 0.0, -0.2))


def test_image_volume_rejects_bad_pitch():
    with pytest.raises(ValidationError, match="volume.voxel_pitch"):
        ImageVolume(data=np.zeros((1, 1, 1), complex), origin=(0, 0, 0), voxel_pitch=(0.1, 0.0, 0.1))
