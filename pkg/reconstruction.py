"""
Восстановление трёхмерного голографического изображения по моностатическому эху
вращающейся цели.

Этапы:
    1. 2-D FFT по θ и y -> Ŝ(Θ, k, k_y);
    2. k_r = √(4k² − k_y²), затухающие отсчёты (4k² ≤ k_y²) обнуляются;
    3. умножение на сопряжённый азимутальный фильтр G*(Θ, k_r) уходящей волны;
    4. обратное FFT по Θ -> P̂(θ, k, k_y);
    5. интерполяция Столта на декартову сетку (k_x, k_y, k_z), покрывающую ±2·k_max;
    6. свёртка спектра на выходную сетку, обратное FFT по (k_x, k_z) и обратное ДПФ по k_y -> p(x, y, z).

Оси Θ и k_y хранятся отцентрованными (от отрицательных частот к положительным).
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np
from scipy import fft
from scipy.ndimage import map_coordinates
from scipy.signal.windows import hann

from errors import GeometryError
from models import (ApertureConfig, AxisDescriptor, EchoCube, ImageVolume, RadarParams, ReconOptions,
                    SpectrumGrid, VoxelGrid)
from utils import options_hash, resolve_threads

log = logging.getLogger(__name__)

StageHook = Callable[[SpectrumGrid], None]


def make_azimuth_filter(theta_grid: np.ndarray, k_r, r0: float, threads: Optional[int] = None,
                        outgoing: bool = False) -> np.ndarray:
    """
    Дискретный спектр по θ функции g(θ, k_r) = e^{j·k_r·R0·cos θ}.

    Углы берутся относительно первого отсчёта сетки. Порядок гармоник естественный
    (как у fft), форма результата (N_θ,) + форма k_r.

    При outgoing=True g берётся только на обращённой к антенне половине (cos θ ≥ 0,
    на границе вес ½): остаётся уходящая волна H¹_m, и пропадает приходящая H²_m,
    которая даёт расфокусированный двойник цели с максимумом у оси вращения.
    """
    theta = np.asarray(theta_grid, dtype=float)
    k_r = np.asarray(k_r, dtype=float)
    relative = (theta - theta[0]).reshape((-1,) + (1,) * k_r.ndim)
    g = np.exp(1j * k_r[None, ...] * r0 * np.cos(relative))
    if outgoing:
        g = g * 0.5 * (1 + np.sign(np.round(np.cos(relative), 12)))
    return fft.fft(g, axis=0, workers=resolve_threads(threads))


def evanescent_mask(k: np.ndarray, k_y: np.ndarray) -> np.ndarray:
    """True там, где волна распространяется (4k² > k_y²), форма [k][k_y]."""
    return 4 * k[:, None] ** 2 > k_y[None, :] ** 2


def radial_wavenumber(k: np.ndarray, k_y: np.ndarray) -> np.ndarray:
    """k_r = √(4k² − k_y²), в затухающей области ноль."""
    arg = 4 * k[:, None] ** 2 - k_y[None, :] ** 2
    return np.sqrt(np.where(arg > 0, arg, 0.0))


def cartesian_wavenumbers(n: int, pitch: float) -> np.ndarray:
    """Отцентрованная сетка волновых чисел, сопряжённая оси из n отсчётов с шагом pitch."""
    return 2 * math.pi * (np.arange(n) - n // 2) / (n * pitch)


def fold_factor(n: int, pitch: float, k_max: float) -> int:
    """
    Во сколько раз расширить декартову сетку (n отсчётов с шагом pitch), чтобы её
    положительный край (n·M/2 − 1)·ΔK, ΔK = 2π/(n·pitch), покрывал 2·k_max.
    """
    return max(1, math.ceil(2 * k_max * pitch / math.pi + 2 / n))


def _fold(data: np.ndarray, axis: int, factor: int) -> np.ndarray:
    """Сворачивает ось естественного порядка длины factor·n в n отсчётов (наложение по модулю n)."""
    if factor == 1:
        return data
    n = data.shape[axis] // factor
    shape = data.shape[:axis] + (factor, n) + data.shape[axis + 1:]
    return data.reshape(shape).sum(axis=axis)


def _stolt_slice(plane, k_y, kx, kz, theta0, dtheta, full, k, ring_tolerance):
    """
    Интерполяция одного среза k_y с полярной сетки (θ, k) на декартову (k_x, k_z).

    По радиусу интерполяция идёт по k_r = √(4k² − k_y²) между распространяющимися
    отсчётами; внутри кольца первого распространяющегося отсчёта спектр равен нулю.
    """
    n_theta, n_k = plane.shape
    kxx, kzz = np.meshgrid(kx, kz, indexing="ij")
    out = np.zeros(kxx.shape, dtype=np.complex128)

    propagating = np.flatnonzero(4 * k ** 2 > k_y ** 2)
    if propagating.size == 0:
        return out
    nodes = np.sqrt(4 * k[propagating] ** 2 - k_y ** 2)
    tolerance = max(ring_tolerance, 1e-9 * nodes[-1])

    theta_star = np.mod(np.arctan2(kzz, kxx), 2 * math.pi)
    kr_star = np.hypot(kxx, kzz)

    # строка n_theta замыкает сетку по углу
    wrap = plane[:1] if full else np.zeros((1, n_k), dtype=plane.dtype)
    padded = np.concatenate([plane, wrap], axis=0)

    theta_idx = np.mod(theta_star - theta0, 2 * math.pi) / dtheta
    # np.interp прижимает индекс к крайним узлам, точки вне кольца отбрасываются ниже
    k_idx = np.interp(kr_star, nodes, propagating.astype(float))
    valid = (kr_star >= nodes[0] - tolerance) & (kr_star <= nodes[-1] + tolerance)
    valid &= theta_idx <= n_theta
    theta_idx = np.clip(theta_idx, 0, n_theta)

    coords = np.stack([theta_idx.ravel(), k_idx.ravel()])
    # map_coordinates работает только с вещественными массивами
    re = map_coordinates(padded.real, coords, order=1, mode="nearest")
    im = map_coordinates(padded.imag, coords, order=1, mode="nearest")
    out[:] = (re + 1j * im).reshape(kxx.shape)
    out[~valid] = 0
    return out


def stolt_interpolate(phat: SpectrumGrid, kx: np.ndarray, kz: np.ndarray,
                      threads: Optional[int] = None) -> SpectrumGrid:
    """
    Переводит P̂(θ, k, k_y) на декартову сетку (k_x, k_y, k_z):
    θ* = atan2(k_z, k_x) mod 2π, k* = ½·√(k_x² + k_y² + k_z²), билинейная интерполяция
    по θ и по k_r = √(k_x² + k_z²) (для каждого среза k_y узлы по k_r неравномерны).

    Вне полосы [k_min, k_max] и в затухающей области спектр равен нулю, по θ сетка замыкается.
    """
    if phat.stage != "polar_spectrum":
        raise GeometryError(f"интерполяция Столта ожидает этап polar_spectrum, получен {phat.stage}")

    theta = phat.axis("theta")
    k = phat.axis("k")
    k_y = phat.axis("k_y")
    kx = np.asarray(kx, dtype=float)
    kz = np.asarray(kz, dtype=float)

    dtheta = theta[1] - theta[0] if len(theta) > 1 else 2 * math.pi
    full = math.isclose(len(theta) * dtheta, 2 * math.pi, rel_tol=1e-9)
    ring_tolerance = 0.0
    if len(k) == 1:
        # одна частота: кольцо шириной в клетку декартовой сетки по k_r
        cell = max(abs(kx[1] - kx[0]) if len(kx) > 1 else 0.0, abs(kz[1] - kz[0]) if len(kz) > 1 else 0.0)
        ring_tolerance = cell / 2

    def work(j: int) -> np.ndarray:
        return _stolt_slice(phat.data[:, :, j], k_y[j], kx, kz, theta[0], dtheta, full, k, ring_tolerance)

    with ThreadPoolExecutor(max_workers=resolve_threads(threads)) as executor:
        planes = list(executor.map(work, range(len(k_y))))

    data = np.stack(planes, axis=1) if planes else np.zeros((len(kx), 0, len(kz)), dtype=np.complex128)
    return SpectrumGrid(
        stage="cartesian_spectrum",
        data=data,
        axes=(
            AxisDescriptor(name="k_x", unit="rad/m", values=kx),
            AxisDescriptor(name="k_y", unit="rad/m", values=k_y),
            AxisDescriptor(name="k_z", unit="rad/m", values=kz),
        ),
        provenance={"operation": "stolt_interpolate"},
    )


class Reconstructor:
    """
    Алгоритм восстановления для заданной апертуры и параметров радара.

    Args:
        cfg: ApertureConfig - геометрия сканирования
        params: RadarParams - параметры развёртки
        opts: ReconOptions - выходная сетка, дополнение нулями и окно
        threads: int | None - число потоков (по умолчанию RISAR_THREADS или число ядер)
        stage_hook: вызывается с SpectrumGrid после этапов 2, 4 и 5
    """

    def __init__(self, cfg: ApertureConfig, params: RadarParams, opts: ReconOptions,
                 threads: Optional[int] = None, stage_hook: Optional[StageHook] = None):
        self.cfg = cfg
        self.params = params
        self.opts = opts
        self.threads = resolve_threads(threads)
        self.stage_hook = stage_hook
        self.grid = VoxelGrid.from_extent(opts.output_dims, opts.output_extent)

    def _check_echo(self, echo: EchoCube):
        if echo.kind != "monostatic":
            raise GeometryError(f"восстановление ожидает моностатический куб, получен {echo.kind}")
        if len(echo.theta) != self.cfg.num_theta:
            raise GeometryError(
                f"число углов в кубе {len(echo.theta)} не совпадает с aperture.num_theta = {self.cfg.num_theta}"
            )
        if len(echo.k) != self.params.num_k:
            raise GeometryError(
                f"число частот в кубе {len(echo.k)} не совпадает с radar.num_k = {self.params.num_k}"
            )
        if not self.cfg.full_rotation:
            log.warning(
                "Сектор поворота %.3f° меньше полного оборота: свёртка по углу перестаёт быть круговой, "
                "изображение будет искажено", math.degrees(self.cfg.theta_max)
            )

    def _dump(self, stage: str, data: np.ndarray, axes):
        if self.stage_hook is None:
            return
        self.stage_hook(SpectrumGrid(
            stage=stage,
            data=data,
            axes=tuple(AxisDescriptor(name=n, unit=u, values=v) for n, u, v in axes),
            provenance={"operation": "reconstruct", "options_hash": options_hash(self.opts)},
        ))

    def _apply_window(self, data: np.ndarray) -> np.ndarray:
        if self.opts.window == "none":
            return data
        w_k = hann(data.shape[1], sym=True)
        w_y = hann(data.shape[2], sym=True)
        return data * w_k[None, :, None] * w_y[None, None, :]

    def _spectrum(self, echo: EchoCube):
        """Шаг 1: 2-D FFT по θ и y с отнесением фазы к абсолютной высоте."""
        n_theta, _, n_y = echo.data.shape
        n_pad = n_y * self.opts.zero_pad_y
        dy = echo.y[1] - echo.y[0] if n_y > 1 else self.cfg.delta_y
        dtheta = echo.theta[1] - echo.theta[0] if n_theta > 1 else self.cfg.delta_theta

        data = self._apply_window(echo.data)
        spectrum = fft.fft(data, axis=0, workers=self.threads)
        spectrum = fft.fft(spectrum, n=n_pad, axis=2, workers=self.threads)
        spectrum = fft.fftshift(spectrum, axes=(0, 2))

        k_y = 2 * math.pi * fft.fftshift(fft.fftfreq(n_pad, dy))
        harmonics = 2 * math.pi * fft.fftshift(fft.fftfreq(n_theta, dtheta))
        spectrum *= np.exp(-1j * k_y * echo.y[0])[None, None, :]
        return spectrum, harmonics, k_y

    def _polar_slice(self, slice_: np.ndarray, k_r: np.ndarray, theta: np.ndarray) -> np.ndarray:
        """Шаги 3-4 для одного среза k_y."""
        g = fft.fftshift(make_azimuth_filter(theta, k_r, self.cfg.r0, threads=1, outgoing=True), axes=0)
        filtered = slice_ * np.conj(g)
        return fft.ifft(fft.ifftshift(filtered, axes=0), axis=0, workers=1)

    def reconstruct(self, echo: EchoCube) -> ImageVolume:
        self._check_echo(echo)
        started = time.perf_counter()
        theta = echo.theta
        k = echo.k

        spectrum, harmonics, k_y = self._spectrum(echo)
        log.debug("Спектр Ŝ(Θ, k, k_y): %s", spectrum.shape)

        # шаг 2
        mask = evanescent_mask(k, k_y)
        spectrum *= mask[None, :, :]
        k_r = radial_wavenumber(k, k_y)
        self._dump("spectrum_theta_k_ky", spectrum,
                   [("Theta", "rad^-1", harmonics), ("k", "rad/m", k), ("k_y", "rad/m", k_y)])

        # шаги 3-4, срезы k_y независимы
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            planes = list(executor.map(
                lambda j: self._polar_slice(spectrum[:, :, j], k_r[:, j], theta),
                range(len(k_y)),
            ))
        polar = np.stack(planes, axis=2)
        del spectrum
        polar_grid = SpectrumGrid(
            stage="polar_spectrum",
            data=polar,
            axes=(
                AxisDescriptor(name="theta", unit="rad", values=theta),
                AxisDescriptor(name="k", unit="rad/m", values=k),
                AxisDescriptor(name="k_y", unit="rad/m", values=k_y),
            ),
        )
        if self.stage_hook is not None:
            self.stage_hook(polar_grid)

        # шаг 5: декартова сетка с шагом 2π/(n·pitch) расширяется до ±2·k_max
        nx, _, nz = self.grid.dims
        px, _, pz = self.grid.pitch
        k_max = float(np.max(k))
        mx = fold_factor(nx, px, k_max)
        mz = fold_factor(nz, pz, k_max)
        if mx > 1 or mz > 1:
            log.info("Шаг вокселей больше π/(2·k_max): декартов спектр строится в %d×%d раз шире "
                     "и сворачивается на выходную сетку", mx, mz)
        kx = cartesian_wavenumbers(nx * mx, px / mx)
        kz = cartesian_wavenumbers(nz * mz, pz / mz)
        cartesian = stolt_interpolate(polar_grid, kx, kz, threads=self.threads)
        if self.stage_hook is not None:
            self.stage_hook(cartesian)

        # шаг 6: свёртка спектра по модулю сетки даёт отсчёты изображения точно в центрах вокселей
        planes = fft.ifftshift(cartesian.data, axes=(0, 2))
        planes = _fold(_fold(planes, 0, mx), 2, mz)
        planes = fft.ifft2(planes, axes=(0, 2), workers=self.threads) / (mx * mz)
        planes = fft.fftshift(planes, axes=(0, 2))
        y_out = self.grid.axis(1)
        steering = np.exp(1j * k_y[:, None] * y_out[None, :]) / len(k_y)
        volume = np.tensordot(planes, steering, axes=([1], [0])).transpose(0, 2, 1)

        log.info("Восстановление %s -> %s за %.2f с", echo.data.shape, volume.shape,
                 time.perf_counter() - started)

        return ImageVolume(
            data=np.ascontiguousarray(volume),
            origin=self.grid.origin,
            voxel_pitch=self.grid.pitch,
            provenance={"operation": "reconstruct", "options_hash": options_hash(self.opts)},
        )


def reconstruct(echo: EchoCube, cfg: ApertureConfig, params: RadarParams, opts: ReconOptions,
                threads: Optional[int] = None, stage_hook: Optional[StageHook] = None) -> ImageVolume:
    return Reconstructor(cfg, params, opts, threads=threads, stage_hook=stage_hook).reconstruct(echo)
