from typing import List


class RisarError(Exception):
    """Базовая ошибка пакета."""


class ConfigError(RisarError):
    """Ошибки конфигурации: по одному сообщению на каждое неверное поле."""

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__("Ошибки конфигурации:\n\t" + "\n\t".join(self.errors))


class GeometryError(RisarError):
    """Несогласованная геометрия: неравномерная виртуальная решётка, несовпадение размеров, не тот тип куба."""


class MetricsError(RisarError):
    """Истинная точка сцены лежит вне объёма."""


class CubeFormatError(RisarError):
    code = "bad_header"

    def __init__(self, message: str):
        super().__init__(f"[{self.code}] {message}")


class MagicMismatchError(CubeFormatError):
    code = "bad_magic"


class TruncatedPayloadError(CubeFormatError):
    code = "truncated"


class AxisInconsistencyError(CubeFormatError):
    code = "axis_mismatch"
