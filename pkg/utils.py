import hashlib
import json
import os
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel

THREADS_ENV = "RISAR_THREADS"


def load_json(file_name: str | Path) -> Any:
    """
       Загружает JSON-файл; относительное имя, которого нет в текущем каталоге, ищется в папке data
    """
    path = Path(file_name)
    if not path.exists() and not path.is_absolute():
        path = Path("data") / file_name
    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)


def save_to_file(model: BaseModel, file_name: str | Path):
    with open(file_name, "w", encoding="utf-8") as f:
        f.write(model.model_dump_json(indent=2))


def options_hash(options: BaseModel) -> str:
    """Короткий хеш параметров операции для поля provenance."""
    payload = json.dumps(options.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def resolve_threads(threads: Optional[int] = None) -> int:
    """
    Число рабочих потоков: явное значение, затем переменная RISAR_THREADS, затем число ядер.
    """
    if threads is not None and threads > 0:
        return threads
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            value = int(env)
            if value > 0:
                return value
        except ValueError:
            pass
    return os.cpu_count() or 1
