from .transform import (
    ZakGrid,
    zak_transform,
    unitarity_check,
    commutation_check,
    zak_extrema,
    norm_squared,
)
from .frame_sums import frame_sum, frame_sum_bounds, build_test_corpus, translation_range
from .calibration import calibrate_kappa

__all__ = [
    "ZakGrid",
    "zak_transform",
    "unitarity_check",
    "commutation_check",
    "zak_extrema",
    "norm_squared",
    "frame_sum",
    "frame_sum_bounds",
    "build_test_corpus",
    "translation_range",
    "calibrate_kappa",
]
