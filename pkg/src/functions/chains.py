"""Characteristic chains {g(xi + 2 pi n_j)}_j of a window over a generator."""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.exceptions import PreconditionError
from src.functions.windows import Window
from src.laurent.polynomial import LaurentPolynomial
from src.models.intervals import Generator

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CharacteristicChain:
    xi: float
    widths: Tuple[int, ...]
    values: Tuple[complex, ...]

    def __post_init__(self):
        if len(self.widths) != len(self.values):
            raise ValueError(
                f"chain has {len(self.widths)} widths but {len(self.values)} values"
            )
        if not all(np.isfinite(v) for v in self.values):
            raise ValueError(f"chain values must be finite, got {self.values}")

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def chain_values(g: Window, widths: Sequence[int], xis: np.ndarray) -> np.ndarray:
    """Matrix of g(xi + 2 pi n) with one row per xi and one column per width."""
    xis = np.asarray(xis, dtype=np.float64)
    ts = xis[:, None] + TWO_PI * np.asarray(widths, dtype=np.float64)[None, :]
    return g.evaluate_array(ts)


def chain(g: Window, gen: Generator, xi: float) -> CharacteristicChain:
    if not gen.base.closure_contains(xi):
        raise PreconditionError(
            f"xi={xi!r} is outside the closure of the generator base {gen.base}",
            xi=xi,
            base=str(gen.base),
        )
    values = chain_values(g, gen.widths, np.array([xi]))[0]
    return CharacteristicChain(
        xi=float(xi), widths=tuple(gen.widths), values=tuple(complex(v) for v in values)
    )


def chain_poly(c: CharacteristicChain) -> LaurentPolynomial:
    """sum_j values_j z^{widths_j}; zero values are dropped."""
    return LaurentPolynomial(zip(c.widths, c.values))
