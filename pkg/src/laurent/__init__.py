from .polynomial import (
    LaurentPolynomial,
    eval_circle,
    eval_circle_many,
    reverse,
    parse_polynomial,
    format_polynomial,
)
from .roots import roots
from .extrema import circle_extrema, grid_extrema
from .unit_roots import unit_root_test

__all__ = [
    "LaurentPolynomial",
    "eval_circle",
    "eval_circle_many",
    "reverse",
    "parse_polynomial",
    "format_polynomial",
    "roots",
    "circle_extrema",
    "grid_extrema",
    "unit_root_test",
]
