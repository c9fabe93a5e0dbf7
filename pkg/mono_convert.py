import logging

import numpy as np

from errors import GeometryError
from geometry import build_virtual_aperture
from models import ApertureConfig, EchoCube

log = logging.getLogger(__name__)


def compensation_phase(k: np.ndarray, separations: np.ndarray, r0: float) -> np.ndarray:
    """Множитель e^{−jk·d_y²/(4R0)} для каждой пары (tx, rx), форма [k][tx][rx]."""
    return np.exp(-1j * k[:, None, None] * separations[None, :, :] ** 2 / (4 * r0))


def multistatic_to_monostatic(echo: EchoCube, cfg: ApertureConfig) -> EchoCube:
    """
    Переводит мультистатическое эхо в эквивалентное моностатическое
    на сетке виртуальных элементов (середины пар tx/rx).

    Отсчёты пар, попавших в одну виртуальную позицию, усредняются.
    """
    if echo.kind != "multistatic":
        raise GeometryError(f"ожидается мультистатический куб, получен {echo.kind}")

    n_theta, n_k = echo.data.shape[:2]
    expected = (cfg.num_y, len(cfg.tx_offsets), len(cfg.rx_offsets))
    if echo.data.shape[2:] != expected:
        raise GeometryError(
            f"размеры куба по элементам {echo.data.shape[2:]} не соответствуют апертуре {expected}"
        )

    aperture = build_virtual_aperture(cfg)
    phase = compensation_phase(echo.k, aperture.separations, cfg.r0)
    compensated = echo.data * phase[None, :, None, :, :]

    flat = compensated.reshape(n_theta * n_k, -1)
    index = aperture.index.ravel()
    n_virtual = len(aperture.positions)
    out = np.zeros((n_theta * n_k, n_virtual), dtype=np.complex128)

    if aperture.duplicates == 0:
        out[:, index] = flat
    else:
        np.add.at(out, (slice(None), index), flat)
        counts = np.bincount(index, minlength=n_virtual)
        out /= counts[None, :]

    log.info("Моностатическое преобразование: %d пар -> %d виртуальных элементов, шаг %.6g м",
             index.size, n_virtual, aperture.spacing)

    provenance = dict(echo.provenance)
    provenance.update({
        "operation": "multistatic_to_monostatic",
        "source": echo.provenance.get("operation", ""),
        "duplicates": str(aperture.duplicates),
    })
    return EchoCube(
        kind="monostatic",
        data=out.reshape(n_theta, n_k, n_virtual),
        theta=echo.theta,
        k=echo.k,
        y=aperture.positions,
        provenance=provenance,
    )
