import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import TABLE1_WAVELENGTH
from errors import GeometryError
from geometry import build_virtual_aperture, virtual_elements, wavenumber_grid
from models import ApertureConfig, RadarParams


def test_wavenumber_grid_single_sample():
    grid = wavenumber_grid(RadarParams(f0=77e9, bandwidth=0, num_k=1))
    assert grid.shape == (1,)
    assert grid[0] == pytest.approx(1613.80, rel=1e-5)
    assert grid[0] == pytest.approx(2 * math.pi * 77e9 / 299792458)


def test_wavenumber_grid_endpoints():
    grid = wavenumber_grid(RadarParams(f0=77e9, bandwidth=4e9, num_k=2))
    assert grid == pytest.approx([1613.80, 1697.63], rel=1e-5)


@given(
    f0=st.floats(min_value=1e8, max_value=3e11),
    bandwidth=st.floats(min_value=1e6, max_value=1e10),
    num_k=st.integers(min_value=2, max_value=256),
)
def test_wavenumber_grid_strictly_increasing(f0, bandwidth, num_k):
    params = RadarParams(f0=f0, bandwidth=bandwidth, num_k=num_k)
    grid = wavenumber_grid(params)
    assert len(grid) == num_k
    assert np.all(np.diff(grid) > 0)
    assert grid[0] == pytest.approx(params.k_min)
    assert grid[-1] == pytest.approx(params.k_max)


def _aperture(tx, rx, num_y=1, delta_y=0.01):
    return ApertureConfig(r0=0.25, num_theta=4, num_y=num_y, delta_y=delta_y, tx_offsets=tx, rx_offsets=rx)


def test_virtual_elements_collocated():
    assert virtual_elements(_aperture((0.0,), (0.0,))) == [(0.0, 0.0)]


def test_virtual_elements_midpoints():
    elements = virtual_elements(_aperture((0.0, 0.01), (0.002,)))
    assert elements == [pytest.approx((0.001, 0.002)), pytest.approx((0.006, 0.008))]


def test_table1_layout_gives_eight_elements_at_quarter_wavelength(table1_mimo):
    positions = sorted(y for y, _ in virtual_elements(table1_mimo))
    assert len(positions) == 8
    assert np.diff(positions) == pytest.approx([TABLE1_WAVELENGTH / 4] * 7)


offsets = st.lists(st.floats(min_value=-0.05, max_value=0.05), min_size=1, max_size=5)


@given(tx=offsets, rx=offsets)
def test_virtual_elements_length(tx, rx):
    assert len(virtual_elements(_aperture(tuple(tx), tuple(rx)))) == len(tx) * len(rx)


@given(half=st.lists(st.floats(min_value=0.0, max_value=0.05), min_size=1, max_size=4))
def test_symmetric_layout_gives_symmetric_positions(half):
    layout = tuple(half) + tuple(-h for h in half)
    positions = np.sort([y for y, _ in virtual_elements(_aperture(layout, layout))])
    assert positions == pytest.approx(-positions[::-1], abs=1e-12)


def test_table1_virtual_aperture(table1_mimo):
    aperture = build_virtual_aperture(table1_mimo)
    assert len(aperture.positions) == 512
    assert aperture.duplicates == 0
    assert aperture.spacing == pytest.approx(TABLE1_WAVELENGTH / 4)
    assert aperture.span == pytest.approx(0.48479, abs=1e-5)
    assert aperture.index.shape == (64, 2, 4)


def test_nonuniform_virtual_aperture_names_gap():
    cfg = _aperture((0.0,), (0.0, 0.01), num_y=2, delta_y=0.05)
    with pytest.raises(GeometryError, match="зазор"):
        build_virtual_aperture(cfg)


def test_duplicate_virtual_positions_are_counted(caplog):
    # пары (0, 0.02) и (0.02, 0) попадают в одну позицию 0.01
    cfg = _aperture((0.0, 0.02), (0.0, 0.02))
    aperture = build_virtual_aperture(cfg)
    assert aperture.positions == pytest.approx([0.0, 0.01, 0.02])
    assert aperture.duplicates == 1
    assert "усреднены" in caplog.text
