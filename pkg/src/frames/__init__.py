from .criteria import ANALYTIC_KAPPA, is_root_sequence, bounds_with_kappa
from .analysis import analyze_step, analyze_frame_set, analyze_continuous, analyze_sampled

__all__ = [
    "ANALYTIC_KAPPA",
    "is_root_sequence",
    "bounds_with_kappa",
    "analyze_step",
    "analyze_frame_set",
    "analyze_continuous",
    "analyze_sampled",
]
