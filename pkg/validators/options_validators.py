from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from models import ReconOptions


def validate_recon_options(opts: ReconOptions, errors: list):
    if opts.zero_pad_y < 1:
        errors.append(f"options.zero_pad_y: коэффициент дополнения нулями должен быть >= 1, получено {opts.zero_pad_y}")

    if len(opts.output_dims) != 3 or any(n < 1 for n in opts.output_dims):
        errors.append(f"options.output_dims: нужны три размера >= 1, получено {list(opts.output_dims)}")

    if len(opts.output_extent) != 3 or any(not e > 0 for e in opts.output_extent):
        errors.append(f"options.output_extent_m: нужны три полуширины > 0, получено {list(opts.output_extent)}")
