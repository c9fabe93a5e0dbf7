import logging
from pathlib import Path
from typing import Dict, Optional

from pydantic import BaseModel

from config import RisarConfig
from cube_io import write_cube
from metrics import MetricsReport, peak_metrics
from mip_export import export_mip, write_pgm
from mono_convert import multistatic_to_monostatic
from reconstruction import reconstruct
from simulator import simulate_mimo_echo, simulate_siso_echo
from utils import save_to_file

log = logging.getLogger(__name__)


class PipelineResult(BaseModel):
    files: Dict[str, str]
    metrics: MetricsReport


def run_pipeline(config: RisarConfig, out_dir: str | Path, siso: bool = False,
                 threads: Optional[int] = None) -> PipelineResult:
    """
    Полный цикл: моделирование эха, перевод MIMO в моностатику (для SISO, заданного флагом
    или одиночными tx и rx в конфигурации, не нужен),
    восстановление, метрики и проекция вдоль z. Все промежуточные файлы пишутся в out_dir.
    """
    radar, aperture, scene, sim, recon = config.as_tuple()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {}

    if siso or aperture.is_siso():
        echo = simulate_siso_echo(scene, aperture, radar, sim, threads=threads)
        files["echo"] = str(out_dir / "echo.cube")
        write_cube(files["echo"], echo)
        mono = echo
    else:
        echo = simulate_mimo_echo(scene, aperture, radar, sim, threads=threads)
        files["echo"] = str(out_dir / "echo.cube")
        write_cube(files["echo"], echo)
        mono = multistatic_to_monostatic(echo, aperture)
        files["mono"] = str(out_dir / "mono.cube")
        write_cube(files["mono"], mono)

    volume = reconstruct(mono, aperture, radar, recon, threads=threads)
    files["volume"] = str(out_dir / "volume.vol")
    write_cube(files["volume"], volume)

    report = peak_metrics(volume, scene, radar, aperture)
    files["metrics"] = str(out_dir / "metrics.json")
    save_to_file(report, files["metrics"])

    files["mip"] = str(out_dir / "mip_z.pgm")
    write_pgm(files["mip"], export_mip(volume, "z", config.db_floor))

    log.info("Результаты записаны в %s", out_dir)
    return PipelineResult(files=files, metrics=report)
