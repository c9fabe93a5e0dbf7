from pathlib import Path
from typing import Union

import numpy as np

from errors import ConfigError
from models import ImageVolume

AXES = {"x": 0, "y": 1, "z": 2}


def axis_index(axis: Union[str, int]) -> int:
    if isinstance(axis, str):
        if axis not in AXES:
            raise ConfigError([f"axis: ожидается x, y или z, получено {axis!r}"])
        return AXES[axis]
    return int(axis)


def mip_db(volume: ImageVolume, axis: Union[str, int], db_floor: float = -40.0) -> np.ndarray:
    """Проекция максимальной интенсивности |volume| в дБ относительно глобального максимума, обрезанная по db_floor."""
    if not db_floor < 0:
        raise ConfigError([f"options.db_floor: порог должен быть отрицательным, получено {db_floor}"])
    projection = np.abs(volume.data).max(axis=axis_index(axis))
    peak = projection.max()
    if peak == 0:
        return np.full(projection.shape, db_floor)
    with np.errstate(divide="ignore"):
        db = 20 * np.log10(projection / peak)
    return np.clip(db, db_floor, 0.0)


def export_mip(volume: ImageVolume, axis: Union[str, int] = "z", db_floor: float = -40.0) -> np.ndarray:
    """
    8-битное изображение проекции: db_floor -> 0 (чёрный), 0 дБ -> 255 (белый).
    Строки изображения идут по первой из оставшихся осей.
    """
    db = mip_db(volume, axis, db_floor)
    return np.rint((db - db_floor) / -db_floor * 255).astype(np.uint8)


def write_pgm(path: Union[str, Path], image: np.ndarray):
    """Записывает 8-битное изображение в двоичный PGM (P5)."""
    height, width = image.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        f.write(np.ascontiguousarray(image, dtype=np.uint8).tobytes())
