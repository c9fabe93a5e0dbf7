import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import point_scene
from cube_io import MAGIC, read_cube, write_cube
from errors import AxisInconsistencyError, CubeFormatError, MagicMismatchError, TruncatedPayloadError
from models import AxisDescriptor, EchoCube, ImageVolume, SpectrumGrid
from reconstruction import reconstruct
from simulator import simulate_mimo_echo, simulate_siso_echo
from validators.grid_validators import STAGE_AXES


def _raw(header: dict, payload: bytes) -> bytes:
    encoded = json.dumps(header).encode("utf-8")
    return MAGIC + len(encoded).to_bytes(4, "little") + encoded + payload


def _small_echo() -> EchoCube:
    data = (np.arange(8) + 1j * np.arange(8)[::-1]).reshape(2, 2, 2)
    return EchoCube(kind="monostatic", data=data, theta=np.array([0.0, np.pi]), k=np.array([10.0, 11.0]),
                    y=np.array([-0.005, 0.005]), provenance={"operation": "test"})


def test_round_trip_small_echo(tmp_path):
    path = tmp_path / "small.cube"
    echo = _small_echo()
    write_cube(path, echo)
    loaded = read_cube(path, EchoCube)
    assert loaded.data.dtype == np.complex128
    assert np.array_equal(loaded.data, echo.data.astype(np.complex64))
    assert np.array_equal(loaded.theta, echo.theta)
    assert np.array_equal(loaded.y, echo.y)
    assert loaded.provenance == {"operation": "test"}


def test_round_trip_multistatic_and_spectrum(tmp_path, toy_mimo, toy_radar):
    echo = simulate_mimo_echo(point_scene((0.05, 0.0, 0.0)), toy_mimo.model_copy(update={"num_theta": 4}),
                              toy_radar)
    write_cube(tmp_path / "mimo.cube", echo)
    loaded = read_cube(tmp_path / "mimo.cube")
    assert loaded.kind == "multistatic"
    assert np.array_equal(loaded.tx_offsets, echo.tx_offsets)
    assert np.array_equal(loaded.rx_offsets, echo.rx_offsets)

    grid = SpectrumGrid(
        stage="polar_spectrum",
        data=np.ones((2, 3, 1), complex),
        axes=(AxisDescriptor(name="theta", unit="rad", values=np.array([0.0, 1.0])),
              AxisDescriptor(name="k", unit="rad/m", values=np.array([1.0, 2.0, 3.0])),
              AxisDescriptor(name="k_y", unit="rad/m", values=np.array([0.0]))),
    )
    write_cube(tmp_path / "polar.spec", grid)
    spectrum = read_cube(tmp_path / "polar.spec", SpectrumGrid)
    assert spectrum.stage == "polar_spectrum"
    assert spectrum.axis("k").tolist() == [1.0, 2.0, 3.0]


def test_header_is_deterministic(tmp_path):
    write_cube(tmp_path / "a.cube", _small_echo())
    write_cube(tmp_path / "b.cube", _small_echo())
    assert (tmp_path / "a.cube").read_bytes() == (tmp_path / "b.cube").read_bytes()


def test_bad_magic(tmp_path):
    path = tmp_path / "bad.cube"
    path.write_bytes(b"NOTACUBE" + bytes(16))
    with pytest.raises(MagicMismatchError) as e:
        read_cube(path)
    assert "[bad_magic]" in str(e.value)


def test_truncated_payload(tmp_path):
    path = tmp_path / "cut.cube"
    write_cube(path, _small_echo())
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(TruncatedPayloadError):
        read_cube(path)


def test_truncated_header(tmp_path):
    path = tmp_path / "cut.cube"
    path.write_bytes(MAGIC + (1000).to_bytes(4, "little") + b"{}")
    with pytest.raises(TruncatedPayloadError):
        read_cube(path)


def test_axis_not_increasing(tmp_path):
    header = {"type": "echo", "kind": "monostatic", "theta": [1.0, 0.0], "k": [1.0], "y": [0.0],
              "shape": [2, 1, 1], "provenance": {}}
    path = tmp_path / "axis.cube"
    path.write_bytes(_raw(header, bytes(16)))
    with pytest.raises(AxisInconsistencyError) as e:
        read_cube(path)
    assert e.value.code == "axis_mismatch"


def test_axis_length_disagrees_with_shape(tmp_path):
    header = {"type": "echo", "kind": "monostatic", "theta": [0.0, 1.0, 2.0], "k": [1.0], "y": [0.0],
              "shape": [2, 1, 1], "provenance": {}}
    path = tmp_path / "axis.cube"
    path.write_bytes(_raw(header, bytes(16)))
    with pytest.raises(AxisInconsistencyError):
        read_cube(path)


def test_broken_header(tmp_path):
    path = tmp_path / "json.cube"
    path.write_bytes(MAGIC + (3).to_bytes(4, "little") + b"{x:")
    with pytest.raises(CubeFormatError) as e:
        read_cube(path)
    assert e.value.code == "bad_header"


def test_unexpected_type(tmp_path):
    path = tmp_path / "echo.cube"
    write_cube(path, _small_echo())
    with pytest.raises(CubeFormatError, match="ImageVolume"):
        read_cube(path, ImageVolume)


_complex = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=100, deadline=None)
@given(
    data=arrays(np.complex128, st.tuples(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4)), elements=_complex),
    origin=st.tuples(*[st.floats(-1, 1)] * 3),
    pitch=st.tuples(*[st.floats(1e-4, 1)] * 3),
)
def test_volume_round_trip(tmp_path_factory, data, origin, pitch):
    path = tmp_path_factory.mktemp("cubes") / "volume.vol"
    volume = ImageVolume(data=data, origin=origin, voxel_pitch=pitch)
    write_cube(path, volume)
    loaded = read_cube(path, ImageVolume)
    assert np.array_equal(loaded.data, data.astype(np.complex64))
    assert loaded.origin == origin
    assert loaded.voxel_pitch == pitch


def _uniform_axis(n: int, start: float, step: float) -> np.ndarray:
    return start + step * np.arange(n)


_start = st.floats(-10, 10)
_step = st.floats(1e-3, 10)


@st.composite
def _echo_cubes(draw, kind: str):
    n_theta, n_k, n_y = draw(st.tuples(*[st.integers(1, 4)] * 3))
    shape = (n_theta, n_k, n_y)
    extra = {}
    if kind == "multistatic":
        n_tx, n_rx = draw(st.integers(1, 3)), draw(st.integers(1, 3))
        shape += (n_tx, n_rx)
        extra = {
            "tx_offsets": np.array(draw(st.lists(st.floats(-0.1, 0.1), min_size=n_tx, max_size=n_tx))),
            "rx_offsets": np.array(draw(st.lists(st.floats(-0.1, 0.1), min_size=n_rx, max_size=n_rx))),
        }
    return EchoCube(
        kind=kind,
        data=draw(arrays(np.complex128, shape, elements=_complex)),
        theta=_uniform_axis(n_theta, draw(_start), draw(_step)),
        k=_uniform_axis(n_k, draw(_start), draw(_step)),
        y=_uniform_axis(n_y, draw(_start), draw(_step)),
        **extra,
    )


@st.composite
def _spectra(draw):
    stage = draw(st.sampled_from(sorted(STAGE_AXES)))
    lengths = draw(st.tuples(*[st.integers(1, 4)] * 3))
    axes = tuple(
        AxisDescriptor(name=name, unit="rad/m", values=_uniform_axis(n, draw(_start), draw(_step)))
        for name, n in zip(STAGE_AXES[stage], lengths)
    )
    return SpectrumGrid(stage=stage, data=draw(arrays(np.complex128, lengths, elements=_complex)), axes=axes)


@settings(max_examples=100, deadline=None)
@given(echo=st.sampled_from(["monostatic", "multistatic"]).flatmap(_echo_cubes))
def test_echo_round_trip(tmp_path_factory, echo):
    path = tmp_path_factory.mktemp("cubes") / "echo.cube"
    write_cube(path, echo)
    loaded = read_cube(path, EchoCube)
    assert loaded.kind == echo.kind
    assert np.array_equal(loaded.data, echo.data.astype(np.complex64))
    for name in ("theta", "k", "y"):
        assert np.array_equal(getattr(loaded, name), getattr(echo, name))
    if echo.kind == "multistatic":
        assert np.array_equal(loaded.tx_offsets, echo.tx_offsets)
        assert np.array_equal(loaded.rx_offsets, echo.rx_offsets)


@settings(max_examples=100, deadline=None)
@given(spectrum=_spectra())
def test_spectrum_round_trip(tmp_path_factory, spectrum):
    path = tmp_path_factory.mktemp("cubes") / "grid.spec"
    write_cube(path, spectrum)
    loaded = read_cube(path, SpectrumGrid)
    assert loaded.stage == spectrum.stage
    assert np.array_equal(loaded.data, spectrum.data.astype(np.complex64))
    for a, b in zip(loaded.axes, spectrum.axes):
        assert (a.name, a.unit) == (b.name, b.unit)
        assert np.array_equal(a.values, b.values)


def test_reconstruction_from_file_matches_memory(tmp_path, toy_siso, toy_radar, toy_recon):
    echo = simulate_siso_echo(point_scene((0.05, 0.0, 0.02)), toy_siso, toy_radar)
    write_cube(tmp_path / "echo.cube", echo)
    from_file = reconstruct(read_cube(tmp_path / "echo.cube", EchoCube), toy_siso, toy_radar, toy_recon, threads=1)
    stored = echo.data.astype(np.complex64).astype(np.complex128)
    in_memory = reconstruct(echo.model_copy(update={"data": stored}), toy_siso,
                            toy_radar, toy_recon, threads=1)
    assert np.array_equal(from_file.data, in_memory.data)
