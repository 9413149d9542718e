from .algebra import normalize_set, tau_2pi, translate_set
from .decompose import decompose, reconstruct, covers_line
from .literal import parse_set, parse_interval, parse_endpoint, format_set

__all__ = [
    "normalize_set",
    "tau_2pi",
    "translate_set",
    "decompose",
    "reconstruct",
    "covers_line",
    "parse_set",
    "parse_interval",
    "parse_endpoint",
    "format_set",
]
