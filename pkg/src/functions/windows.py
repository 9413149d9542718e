"""
Window functions: anything that can be evaluated on an array of t values and has
a bounded support with known breakpoints. Piecewise functions are windows; the
wrappers below build the restricted, scaled and time-frequency shifted windows
used by the analysis and the Zak oracle.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Tuple

import numpy as np

from src.models.intervals import BasicSupportSet

TWO_PI = 2.0 * math.pi
SNAP_RTOL = 1e-12


def snap_to_breakpoints(
    ts: np.ndarray, breakpoints: np.ndarray, rtol: float = SNAP_RTOL
) -> np.ndarray:
    """Move every t within rtol*max(1,|t|) of a breakpoint exactly onto it."""
    snapped = np.array(ts, dtype=np.float64, copy=True)
    if breakpoints.size == 0 or snapped.size == 0:
        return snapped
    index = np.searchsorted(breakpoints, snapped)
    left = breakpoints[np.clip(index - 1, 0, breakpoints.size - 1)]
    right = breakpoints[np.clip(index, 0, breakpoints.size - 1)]
    nearest = np.where(np.abs(snapped - left) <= np.abs(snapped - right), left, right)
    close = np.abs(snapped - nearest) <= rtol * np.maximum(1.0, np.abs(snapped))
    snapped[close] = nearest[close]
    return snapped


def smooth_bump(ts: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """exp(-1/(1-x^2)) with x mapping (lo, hi) onto (-1, 1); zero elsewhere."""
    ts = np.asarray(ts, dtype=np.float64)
    x = (2.0 * ts - (lo + hi)) / (hi - lo)
    inside = np.abs(x) < 1.0
    values = np.zeros(ts.shape, dtype=np.float64)
    values[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return values


class Window(ABC):
    """A compactly supported function of t."""

    @property
    @abstractmethod
    def support(self) -> Tuple[float, float]:
        """Bounded hull (lo, hi) outside of which the window vanishes."""

    @property
    @abstractmethod
    def breakpoints(self) -> np.ndarray:
        """Sorted points where the window may fail to be smooth."""

    @abstractmethod
    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        """Complex values at every t."""

    def evaluate(self, t: float) -> complex:
        return complex(self.evaluate_array(np.array([t], dtype=np.float64))[0])

    def __call__(self, ts: np.ndarray) -> np.ndarray:
        return self.evaluate_array(ts)


def _merge_breakpoints(*arrays: np.ndarray) -> np.ndarray:
    merged = np.concatenate([np.asarray(a, dtype=np.float64) for a in arrays])
    return np.unique(merged)


@dataclass(frozen=True)
class Restricted(Window):
    """g * chi_E."""

    window: Window
    support_set: BasicSupportSet

    @property
    def support(self) -> Tuple[float, float]:
        lo, hi = self.window.support
        set_lo, set_hi = self.support_set.hull
        lo, hi = max(lo, set_lo), min(hi, set_hi)
        return lo, max(lo, hi)

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return _merge_breakpoints(self.window.breakpoints, self.support_set.breakpoints())

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        snapped = snap_to_breakpoints(ts, self.breakpoints)
        return self.window.evaluate_array(snapped) * self.support_set.indicator(snapped)


@dataclass(frozen=True)
class Scaled(Window):
    """c * g."""

    window: Window
    factor: complex

    @property
    def support(self) -> Tuple[float, float]:
        return self.window.support

    @property
    def breakpoints(self) -> np.ndarray:
        return self.window.breakpoints

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        return self.factor * self.window.evaluate_array(ts)


@dataclass(frozen=True)
class ModulatedTranslate(Window):
    """(M_m T_{2 pi n} g)(t) = e^{imt} g(t - 2 pi n)."""

    window: Window
    m: int
    n: int

    @property
    def support(self) -> Tuple[float, float]:
        lo, hi = self.window.support
        return lo + TWO_PI * self.n, hi + TWO_PI * self.n

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return self.window.breakpoints + TWO_PI * self.n

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        return np.exp(1j * self.m * ts) * self.window.evaluate_array(ts - TWO_PI * self.n)


@dataclass(frozen=True)
class CallableWindow(Window):
    """
    An arbitrary vectorised callback with a declared support.

    The callback is only consulted inside the support; it must return values
    broadcastable to the shape of its argument.
    """

    func: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    extra_breakpoints: Tuple[float, ...] = ()

    @property
    def support(self) -> Tuple[float, float]:
        return self.lo, self.hi

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return _merge_breakpoints([self.lo, self.hi], list(self.extra_breakpoints))

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        values = np.zeros(ts.shape, dtype=np.complex128)
        inside = (ts >= self.lo) & (ts < self.hi)
        if np.any(inside):
            values[inside] = np.broadcast_to(self.func(ts[inside]), ts[inside].shape)
        return values


@dataclass(frozen=True)
class TrigBumpWindow(Window):
    """(sum_k c_k e^{ikt}) times a smooth bump supported in (lo, hi)."""

    coefficients: Tuple[complex, ...]
    lo: float = 0.0
    hi: float = TWO_PI
    frequencies: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.frequencies:
            half = len(self.coefficients) // 2
            object.__setattr__(
                self, "frequencies", tuple(range(-half, len(self.coefficients) - half))
            )

    @property
    def support(self) -> Tuple[float, float]:
        return self.lo, self.hi

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return np.array([self.lo, self.hi], dtype=np.float64)

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        phases = np.exp(1j * np.multiply.outer(ts, np.array(self.frequencies)))
        return (phases @ np.array(self.coefficients, dtype=np.complex128)) * smooth_bump(
            ts, self.lo, self.hi
        )


@dataclass(frozen=True)
class ZakBumpWindow(Window):
    """
    A test function whose Zak transform concentrates near w = center.

    f(t + 2 pi n) = b(t) * c_n for t in [0, 2pi), |n| <= K, with b a smooth bump on
    (0, 2pi) and c_n = e^{-in center} cos^2(pi n / (2(K+1))). Then
    Zf(t, w) = b(t) * sum_n c_n e^{inw} / sqrt(2pi), a raised-cosine kernel in w
    of bandwidth about 1/K around `center`.
    """

    order: int
    center: float = math.pi

    @property
    def support(self) -> Tuple[float, float]:
        return -TWO_PI * self.order, TWO_PI * (self.order + 1)

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return TWO_PI * np.arange(-self.order, self.order + 2, dtype=np.float64)

    @cached_property
    def weights(self) -> np.ndarray:
        n = np.arange(-self.order, self.order + 1)
        return np.exp(-1j * n * self.center) * np.cos(np.pi * n / (2 * (self.order + 1))) ** 2

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        periods = np.floor(ts / TWO_PI).astype(np.int64)
        residues = ts - TWO_PI * periods
        values = np.zeros(ts.shape, dtype=np.complex128)
        inside = np.abs(periods) <= self.order
        values[inside] = smooth_bump(residues[inside], 0.0, TWO_PI) * self.weights[
            periods[inside] + self.order
        ]
        return values
