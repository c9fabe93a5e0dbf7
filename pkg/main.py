import argparse
import logging
import sys
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from backprojection import backproject
from config import parse_config
from cube_io import read_cube, write_cube
from errors import ConfigError, CubeFormatError, GeometryError, MetricsError
from metrics import peak_metrics
from mip_export import export_mip, write_pgm
from models import EchoCube, ImageVolume, SimOptions, VoxelGrid
from mono_convert import multistatic_to_monostatic
from pipeline import run_pipeline
from reconstruction import reconstruct
from resolution import psf_analytic, resolution_report
from sampling_checker import check_sampling
from simulator import simulate_mimo_echo, simulate_siso_echo
from utils import save_to_file

EXIT_OK = 0
EXIT_BAD_ARGUMENTS = 2
EXIT_VALIDATION = 3
EXIT_IO = 4
EXIT_SAMPLING = 5

log = logging.getLogger("risar")


def cmd_simulate(args) -> int:
    radar, aperture, scene, sim, _ = parse_config(args.config).as_tuple()
    if args.no_amplitude:
        sim = SimOptions(include_amplitude=False)
    if args.siso:
        echo = simulate_siso_echo(scene, aperture, radar, sim, threads=args.threads)
    else:
        echo = simulate_mimo_echo(scene, aperture, radar, sim, threads=args.threads)
    write_cube(args.out, echo)
    print(f"Эхо {echo.kind} {echo.data.shape} записано в {args.out}")
    return EXIT_OK


def cmd_convert(args) -> int:
    config = parse_config(args.config)
    echo = read_cube(args.input, EchoCube)
    mono = multistatic_to_monostatic(echo, config.aperture)
    write_cube(args.out, mono)
    print(f"Моностатический куб {mono.data.shape} записан в {args.out}, "
          f"совпадающих позиций: {mono.provenance.get('duplicates', '0')}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    radar, aperture, _, _, recon = parse_config(args.config).as_tuple()
    echo = read_cube(args.input, EchoCube)

    hook = None
    if args.dump_stages:
        dump_dir = Path(args.dump_stages)
        dump_dir.mkdir(parents=True, exist_ok=True)

        def hook(grid):
            write_cube(dump_dir / f"{grid.stage}.spec", grid)

    volume = reconstruct(echo, aperture, radar, recon, threads=args.threads, stage_hook=hook)
    write_cube(args.out, volume)
    print(f"Объём {volume.data.shape} записан в {args.out}")
    return EXIT_OK


def parse_grid(text: str) -> VoxelGrid:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("ожидается NX,NY,NZ,EXTENT")
    try:
        dims = tuple(int(p) for p in parts[:3])
        extent = float(parts[3])
        return VoxelGrid.from_extent(dims, (extent, extent, extent))
    except (ValueError, ValidationError) as e:
        raise argparse.ArgumentTypeError(f"некорректная сетка {text!r}: {e}")


def cmd_oracle(args) -> int:
    radar, aperture, _, _, _ = parse_config(args.config).as_tuple()
    echo = read_cube(args.input, EchoCube)
    volume = backproject(echo, aperture, radar, args.grid, threads=args.threads)
    write_cube(args.out, volume)
    print(f"Объём обратного проецирования {volume.data.shape} записан в {args.out}")
    return EXIT_OK


def cmd_check(args) -> int:
    config = parse_config(args.config)
    target_radius = args.target_radius if args.target_radius is not None else config.scene.target_radius
    target_height = args.target_height if args.target_height is not None else config.scene.target_height

    report = check_sampling(config.radar, config.aperture, target_radius, target_height)
    print("Критерии дискретизации:")
    print(report)
    print("Разрешение:")
    print(resolution_report(config.radar, config.aperture))
    if args.out:
        save_to_file(report, args.out)
    return EXIT_OK if report.success else EXIT_SAMPLING


def cmd_psf(args) -> int:
    radar = parse_config(args.config).radar
    r = np.linspace(0.0, args.rmax, args.samples)
    np.savetxt(args.out, np.column_stack([r, psf_analytic(r, radar)]), delimiter=",",
               header="r_m,value", comments="", fmt="%.12e")
    print(f"ФРТ ({args.samples} точек до {args.rmax} м) записана в {args.out}")
    return EXIT_OK


def cmd_mip(args) -> int:
    volume = read_cube(args.input, ImageVolume)
    write_pgm(args.out, export_mip(volume, args.axis, args.db_floor))
    print(f"Проекция вдоль {args.axis} записана в {args.out}")
    return EXIT_OK


def cmd_metrics(args) -> int:
    config = parse_config(args.config)
    volume = read_cube(args.input, ImageVolume)
    report = peak_metrics(volume, config.scene, config.radar, config.aperture)
    save_to_file(report, args.out)
    print(report)
    return EXIT_OK


def cmd_view(args) -> int:
    # dash нужен только для просмотра
    from mip_viewer import create_mip_viewer

    volume = read_cube(args.input, ImageVolume)
    create_mip_viewer(volume, args.db_floor, args.port)
    return EXIT_OK


def cmd_run(args) -> int:
    config = parse_config(args.config)
    result = run_pipeline(config, args.out_dir, siso=args.siso, threads=args.threads)
    for name, path in result.files.items():
        print(f"  {name}: {path}")
    print(result.metrics)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="risar", description="Голографическое изображение R-ISAR")
    parser.add_argument("--threads", type=int, default=None, help="число потоков (иначе RISAR_THREADS)")
    parser.add_argument("--verbose", action="store_true", help="подробный журнал")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="моделирование эха")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--siso", action="store_true")
    p.add_argument("--no-amplitude", action="store_true")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("convert", help="MIMO -> моностатический куб")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("reconstruct", help="восстановление изображения")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dump-stages", default=None)
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("oracle", help="обратное проецирование")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grid", type=parse_grid, required=True, help="NX,NY,NZ,EXTENT")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("check", help="критерии дискретизации и разрешение")
    p.add_argument("--config", required=True)
    p.add_argument("--target-radius", type=float, default=None)
    p.add_argument("--target-height", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("psf", help="аналитическая ФРТ")
    p.add_argument("--config", required=True)
    p.add_argument("--rmax", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_psf)

    p = sub.add_parser("mip", help="проекция максимальной интенсивности")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--axis", choices=["x", "y", "z"], default="z")
    p.add_argument("--out", required=True)
    p.add_argument("--db-floor", type=float, default=-40.0)
    p.set_defaults(handler=cmd_mip)

    p = sub.add_parser("metrics", help="метрики пиков")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_metrics)

    p = sub.add_parser("view", help="просмотр проекций в браузере")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--db-floor", type=float, default=-40.0)
    p.add_argument("--port", type=int, default=8050)
    p.set_defaults(handler=cmd_view)

    p = sub.add_parser("run", help="полный цикл от моделирования до метрик")
    p.add_argument("--config", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--siso", action="store_true")
    p.set_defaults(handler=cmd_run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_BAD_ARGUMENTS if e.code else EXIT_OK

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s")

    try:
        return args.handler(args)
    except (ConfigError, GeometryError, MetricsError, ValidationError) as e:
        print(f"Ошибка проверки: {e}")
        return EXIT_VALIDATION
    except (CubeFormatError, OSError) as e:
        print(f"Ошибка ввода-вывода: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
