"""
Extrema of q(theta) = |p(e^{i theta})|^2 on the unit circle.

With P the ordinary polynomial z^{-n_min} p(z) of degree D and P* its conjugate
reversal, q(theta) = z^{-D} P(z) P*(z) on |z| = 1. Differentiating in theta gives
q'(theta) = i z^{-D} T(z) with T(z) = sum_k k s_k z^{k+D}, where s_k are the
coefficients of z^{-D} P P*. The critical angles are the arguments of the roots of
T on the circle. Evaluating q at the argument of every root of T (plus 0 and pi)
can only add candidate angles, never lose a true extremum, so no modulus filter is
applied.

The critical-point values are authoritative. A dense grid of 4096*max(1, D) angles
with ternary refinement is run as a cross-check and must agree to 1e-8 * (sum|a_j|)^2.
"""

import math
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from src.exceptions import InconsistencyError
from src.laurent.polynomial import LaurentPolynomial
from src.laurent.roots import polish_roots
from src.log import logger
from src.models.laurent import CircleExtrema

TWO_PI = 2.0 * math.pi
GRID_POINTS_PER_DEGREE = 4096
ANGLE_TOL = 1e-12
AGREEMENT_TOL = 1e-8


def circle_extrema(p: LaurentPolynomial, cross_check: bool = True) -> CircleExtrema:
    """
    Min and max of |p|^2 on the unit circle with witness angles.

    The zero polynomial has extrema 0 at angle 0. The result depends only on
    z^{-n_min} p, so shifting p by a power of z gives an identical result.
    """
    if p.is_zero:
        return CircleExtrema(min_sq=0.0, argmin_theta=0.0, max_sq=0.0, argmax_theta=0.0)
    return _cached_extrema(p.normalized(), cross_check)


@lru_cache(maxsize=8192)
def _cached_extrema(q: LaurentPolynomial, cross_check: bool) -> CircleExtrema:
    critical = _critical_point_extrema(q)
    if cross_check:
        grid = _grid_extrema(q)
        scale = q.l1_norm**2
        min_gap = abs(critical.min_sq - grid.min_sq)
        max_gap = abs(critical.max_sq - grid.max_sq)
        if min_gap > AGREEMENT_TOL * scale or max_gap > AGREEMENT_TOL * scale:
            raise InconsistencyError(
                f"critical-point and grid extrema of |{q}|^2 disagree "
                f"(min {critical.min_sq!r} vs {grid.min_sq!r}, max {critical.max_sq!r} vs {grid.max_sq!r})",
                polynomial=str(q),
            )
        logger.debug(
            f"EXTREMA_CROSS_CHECK | degree={q.span} | min_gap={min_gap:.3e} | max_gap={max_gap:.3e}"
        )
    return critical


def _wrap_angles(thetas: np.ndarray) -> np.ndarray:
    wrapped = np.mod(thetas, TWO_PI)
    wrapped[wrapped >= TWO_PI] = 0.0
    return wrapped


def _modulus_squared(descending: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    return np.abs(np.polyval(descending, np.exp(1j * np.asarray(thetas)))) ** 2


def _critical_point_extrema(q: LaurentPolynomial) -> CircleExtrema:
    ascending = q.ordinary_coefficients()
    degree = q.span
    if degree == 0:
        value = float(abs(ascending[0]) ** 2)
        return CircleExtrema(min_sq=value, argmin_theta=0.0, max_sq=value, argmax_theta=0.0)

    product = np.convolve(ascending, np.conj(ascending[::-1]))
    derivative = np.arange(-degree, degree + 1) * product
    descending_derivative = derivative[::-1]
    critical = polish_roots(descending_derivative, np.roots(descending_derivative))

    thetas = _wrap_angles(np.concatenate([np.angle(critical), [0.0, math.pi]]))
    values = _modulus_squared(ascending[::-1], thetas)
    i_min = int(np.argmin(values))
    i_max = int(np.argmax(values))
    return CircleExtrema(
        min_sq=float(values[i_min]),
        argmin_theta=float(thetas[i_min]),
        max_sq=float(values[i_max]),
        argmax_theta=float(thetas[i_max]),
    )


def _ternary_search(
    func: Callable[[float], float], lo: float, hi: float, minimize: bool
) -> Tuple[float, float]:
    sign = 1.0 if minimize else -1.0
    while hi - lo > ANGLE_TOL:
        third = (hi - lo) / 3.0
        left, right = lo + third, hi - third
        if sign * func(left) < sign * func(right):
            hi = right
        else:
            lo = left
    middle = 0.5 * (lo + hi)
    return middle, func(middle)


def _grid_extrema(q: LaurentPolynomial) -> CircleExtrema:
    descending = q.ordinary_coefficients()[::-1]
    count = GRID_POINTS_PER_DEGREE * max(1, q.span)
    step = TWO_PI / count
    thetas = step * np.arange(count)
    values = _modulus_squared(descending, thetas)

    def func(theta: float) -> float:
        return float(_modulus_squared(descending, np.array([theta]))[0])

    i_min = int(np.argmin(values))
    i_max = int(np.argmax(values))
    argmin, min_sq = _ternary_search(func, thetas[i_min] - step, thetas[i_min] + step, True)
    argmax, max_sq = _ternary_search(func, thetas[i_max] - step, thetas[i_max] + step, False)
    if values[i_min] < min_sq:
        argmin, min_sq = thetas[i_min], float(values[i_min])
    if values[i_max] > max_sq:
        argmax, max_sq = thetas[i_max], float(values[i_max])

    return CircleExtrema(
        min_sq=min_sq,
        argmin_theta=float(_wrap_angles(np.array([argmin]))[0]),
        max_sq=max_sq,
        argmax_theta=float(_wrap_angles(np.array([argmax]))[0]),
    )


def grid_extrema(p: LaurentPolynomial) -> CircleExtrema:
    """The dense-grid estimate on its own, for comparisons against circle_extrema."""
    if p.is_zero:
        return CircleExtrema(min_sq=0.0, argmin_theta=0.0, max_sq=0.0, argmax_theta=0.0)
    return _grid_extrema(p.normalized())
