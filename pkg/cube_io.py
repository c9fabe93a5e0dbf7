"""
Двоичный контейнер для кубов эха, спектров и объёмов.

Формат файла:
    8 байт   магическая строка RISAR001
    4 байта  длина заголовка (uint32, little-endian)
    N байт   заголовок JSON (тип, размеры, оси, provenance)
    payload  пары (re, im) float32 little-endian в порядке строк
"""
import json
import logging
from pathlib import Path
from typing import Optional, Type, Union

import numpy as np
from pydantic import ValidationError

from errors import AxisInconsistencyError, CubeFormatError, MagicMismatchError, TruncatedPayloadError
from models import AxisDescriptor, EchoCube, ImageVolume, SpectrumGrid

log = logging.getLogger(__name__)

MAGIC = b"RISAR001"
HEADER_LENGTH_BYTES = 4
PAYLOAD_DTYPE = np.dtype("<c8")

CubeLike = Union[EchoCube, SpectrumGrid, ImageVolume]


def _axis(values) -> list:
    return np.asarray(values, dtype=float).tolist()


def _header(obj: CubeLike) -> dict:
    if isinstance(obj, EchoCube):
        header = {
            "type": "echo",
            "kind": obj.kind,
            "theta": _axis(obj.theta),
            "k": _axis(obj.k),
            "y": _axis(obj.y),
        }
        if obj.kind == "multistatic":
            header["tx_offsets"] = _axis(obj.tx_offsets)
            header["rx_offsets"] = _axis(obj.rx_offsets)
    elif isinstance(obj, SpectrumGrid):
        header = {
            "type": "spectrum",
            "stage": obj.stage,
            "axes": [{"name": a.name, "unit": a.unit, "values": _axis(a.values)} for a in obj.axes],
        }
    elif isinstance(obj, ImageVolume):
        header = {
            "type": "volume",
            "origin": [float(v) for v in obj.origin],
            "voxel_pitch": [float(v) for v in obj.voxel_pitch],
        }
    else:
        raise TypeError(f"неподдерживаемый тип {type(obj).__name__}")

    header["shape"] = list(obj.data.shape)
    header["provenance"] = dict(obj.provenance)
    return header


def write_cube(path: Union[str, Path], obj: CubeLike):
    header = json.dumps(_header(obj), sort_keys=True, separators=(",", ":")).encode("utf-8")
    payload = np.ascontiguousarray(obj.data, dtype=PAYLOAD_DTYPE).tobytes()
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(len(header).to_bytes(HEADER_LENGTH_BYTES, "little"))
        f.write(header)
        f.write(payload)
    log.debug("Записан %s: %s, %d байт данных", path, obj.data.shape, len(payload))


def _check_monotone(name: str, values: list):
    if len(values) > 1 and not np.all(np.diff(values) > 0):
        raise AxisInconsistencyError(f"ось {name} не возрастает")


def _build(header: dict, data: np.ndarray) -> CubeLike:
    kind = header.get("type")
    if kind == "echo":
        for name in ("theta", "k", "y"):
            _check_monotone(name, header[name])
        return EchoCube(
            kind=header["kind"],
            data=data,
            theta=np.array(header["theta"], dtype=float),
            k=np.array(header["k"], dtype=float),
            y=np.array(header["y"], dtype=float),
            tx_offsets=np.array(header["tx_offsets"], dtype=float) if "tx_offsets" in header else None,
            rx_offsets=np.array(header["rx_offsets"], dtype=float) if "rx_offsets" in header else None,
            provenance=header.get("provenance", {}),
        )
    if kind == "spectrum":
        for axis in header["axes"]:
            _check_monotone(axis["name"], axis["values"])
        return SpectrumGrid(
            stage=header["stage"],
            data=data,
            axes=tuple(
                AxisDescriptor(name=a["name"], unit=a["unit"], values=np.array(a["values"], dtype=float))
                for a in header["axes"]
            ),
            provenance=header.get("provenance", {}),
        )
    if kind == "volume":
        return ImageVolume(
            data=data,
            origin=tuple(header["origin"]),
            voxel_pitch=tuple(header["voxel_pitch"]),
            provenance=header.get("provenance", {}),
        )
    raise CubeFormatError(f"неизвестный тип данных {kind!r}")


def read_cube(path: Union[str, Path], expected: Optional[Type[CubeLike]] = None) -> CubeLike:
    """
    Читает контейнер; данные хранятся как complex64 и возвращаются как complex128.

    Raises:
        MagicMismatchError, TruncatedPayloadError, AxisInconsistencyError, CubeFormatError
    """
    with open(path, "rb") as f:
        raw = f.read()

    if raw[:len(MAGIC)] != MAGIC:
        raise MagicMismatchError(f"{path}: файл не является контейнером RISAR001")

    offset = len(MAGIC)
    if len(raw) < offset + HEADER_LENGTH_BYTES:
        raise TruncatedPayloadError(f"{path}: нет длины заголовка")
    header_length = int.from_bytes(raw[offset:offset + HEADER_LENGTH_BYTES], "little")
    offset += HEADER_LENGTH_BYTES
    if len(raw) < offset + header_length:
        raise TruncatedPayloadError(f"{path}: заголовок обрезан")

    try:
        header = json.loads(raw[offset:offset + header_length].decode("utf-8"))
        shape = tuple(int(n) for n in header["shape"])
    except (ValueError, KeyError, TypeError) as e:
        raise CubeFormatError(f"{path}: некорректный заголовок: {e}")
    offset += header_length

    expected_bytes = int(np.prod(shape, dtype=np.int64)) * PAYLOAD_DTYPE.itemsize
    payload = raw[offset:]
    if len(payload) != expected_bytes:
        raise TruncatedPayloadError(
            f"{path}: длина данных {len(payload)} байт, по заголовку ожидается {expected_bytes}"
        )

    data = np.frombuffer(payload, dtype=PAYLOAD_DTYPE).astype(np.complex128).reshape(shape)
    try:
        obj = _build(header, data)
    except ValidationError as e:
        raise AxisInconsistencyError(f"{path}: {e.errors()[0]['msg']}")
    except KeyError as e:
        raise CubeFormatError(f"{path}: в заголовке нет поля {e}")

    if expected is not None and not isinstance(obj, expected):
        raise CubeFormatError(f"{path}: ожидается {expected.__name__}, в файле {type(obj).__name__}")
    return obj
