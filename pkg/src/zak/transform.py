"""
Discretized Zak transform Zf(t, w) = (1/sqrt(2pi)) sum_n f(t + 2 pi n) e^{inw} on [0, 2pi)^2.

For compactly supported f the sum over n is finite, so the grid values are exact
up to rounding. The w-direction is an inverse DFT over n (folded modulo N_w).
"""

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy import integrate

from src.exceptions import OracleError, PreconditionError, UnsupportedFunctionError
from src.functions.windows import ModulatedTranslate, Window
from src.log import logger
from src.models.intervals import BasicSupportSet
from src.models.zak import ZakExtrema

TWO_PI = 2.0 * math.pi
MIN_GRID = 8
PANEL_ORDER = 32


@dataclass(frozen=True, eq=False)
class ZakGrid:
    values: np.ndarray
    t_step: float
    w_step: float
    support_range: Tuple[int, int]

    @property
    def n_t(self) -> int:
        return self.values.shape[0]

    @property
    def n_w(self) -> int:
        return self.values.shape[1]

    @property
    def t_points(self) -> np.ndarray:
        return self.t_step * np.arange(self.n_t)

    @property
    def w_points(self) -> np.ndarray:
        return self.w_step * np.arange(self.n_w)

    def to_csv(self) -> str:
        """Row-major "t,w,re,im,abs2" table."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "w", "re", "im", "abs2"])
        ws = self.w_points
        for t, row in zip(self.t_points, self.values):
            for w, value in zip(ws, row):
                writer.writerow(
                    [
                        f"{t:.17g}",
                        f"{w:.17g}",
                        f"{value.real:.17g}",
                        f"{value.imag:.17g}",
                        f"{abs(value) ** 2:.17g}",
                    ]
                )
        return buffer.getvalue()


def translate_range(f: Window) -> Tuple[int, int]:
    """Smallest [n_lo, n_hi] such that f(t + 2 pi n) can be nonzero for t in [0, 2pi)."""
    lo, hi = f.support
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise UnsupportedFunctionError(f"window support ({lo}, {hi}) is not compact")
    return math.floor(lo / TWO_PI), max(math.floor(lo / TWO_PI), math.ceil(hi / TWO_PI) - 1)


def _zak_rows(f: Window, ts: np.ndarray, n_w: int) -> Tuple[np.ndarray, Tuple[int, int]]:
    n_lo, n_hi = translate_range(f)
    periods = np.arange(n_lo, n_hi + 1)
    samples = f.evaluate_array(ts[:, None] + TWO_PI * periods[None, :])
    folded = np.zeros((len(ts), n_w), dtype=np.complex128)
    np.add.at(folded, (slice(None), np.mod(periods, n_w)), samples)
    # sum_n F[n] e^{2 pi i n b / N_w} = N_w * ifft(F)[b]
    return n_w * np.fft.ifft(folded, axis=1) / math.sqrt(TWO_PI), (n_lo, n_hi)


def _check_grid(n_t: int, n_w: int) -> None:
    if n_t < MIN_GRID or n_w < MIN_GRID:
        raise PreconditionError(f"Zak grid needs N_t, N_w >= {MIN_GRID}, got {n_t}x{n_w}")


def zak_transform(f: Window, n_t: int, n_w: int) -> ZakGrid:
    _check_grid(n_t, n_w)
    t_step, w_step = TWO_PI / n_t, TWO_PI / n_w
    values, support_range = _zak_rows(f, t_step * np.arange(n_t), n_w)
    logger.debug(f"ZAK_TRANSFORM | grid={n_t}x{n_w} | translates={support_range}")
    return ZakGrid(values=values, t_step=t_step, w_step=w_step, support_range=support_range)


def residue_breakpoints(*windows: Window) -> np.ndarray:
    """Breakpoints of the windows folded into [0, 2pi), together with 0 and 2pi."""
    points = [np.array([0.0, TWO_PI])]
    for window in windows:
        residues = np.mod(window.breakpoints, TWO_PI)
        points.append(residues)
    merged = np.unique(np.concatenate(points))
    # residues within rounding of 2pi fold onto 0
    merged = merged[(merged > 1e-12) & (merged < TWO_PI - 1e-12)]
    return np.concatenate([[0.0], merged, [TWO_PI]])


def _gauss_legendre_nodes(edges: np.ndarray, n_t: int) -> Tuple[np.ndarray, np.ndarray]:
    base_nodes, base_weights = np.polynomial.legendre.leggauss(PANEL_ORDER)
    nodes: List[np.ndarray] = []
    weights: List[np.ndarray] = []
    for c, d in zip(edges, edges[1:]):
        panels = max(1, round(n_t * (d - c) / (TWO_PI * PANEL_ORDER)))
        panel_edges = np.linspace(c, d, panels + 1)
        for a, b in zip(panel_edges, panel_edges[1:]):
            half = 0.5 * (b - a)
            nodes.append(a + half * (base_nodes + 1.0))
            weights.append(half * base_weights)
    return np.concatenate(nodes), np.concatenate(weights)


def norm_squared(f: Window) -> float:
    """||f||^2 by adaptive quadrature on every smooth piece of f."""
    total = 0.0
    for c, d in zip(f.breakpoints, f.breakpoints[1:]):
        if d <= c:
            continue
        value, _ = integrate.quad(
            lambda t: abs(f.evaluate(t)) ** 2, c, d, epsabs=0.0, epsrel=1e-12, limit=200
        )
        total += value
    return total


def unitarity_check(f: Window, n_t: int, n_w: int) -> float:
    """
    |‖Zf‖^2 - ‖f‖^2| / ‖f‖^2.

    ‖Zf‖^2 over [0,2pi)^2 uses about n_t Gauss-Legendre nodes in t, split at the
    folded breakpoints of f, and the n_w-point grid in w (exact for trigonometric
    sums of fewer than n_w terms).
    """
    _check_grid(n_t, n_w)
    nodes, weights = _gauss_legendre_nodes(residue_breakpoints(f), n_t)
    rows, _ = _zak_rows(f, nodes, n_w)
    zak_norm = float(weights @ (np.sum(np.abs(rows) ** 2, axis=1) * (TWO_PI / n_w)))
    f_norm = norm_squared(f)
    if f_norm <= 0.0:
        raise OracleError("unitarity check needs a nonzero function")
    error = abs(zak_norm - f_norm) / f_norm
    logger.info(f"ZAK_UNITARITY | grid={n_t}x{n_w} | norm={f_norm:.12e} | rel_error={error:.3e}")
    return error


def commutation_check(g: Window, m: int, n: int, n_t: int, n_w: int) -> float:
    """max |Z(M_m T_2pin g) - e^{i(mt + nw)} Zg| over the grid."""
    base = zak_transform(g, n_t, n_w)
    shifted = zak_transform(ModulatedTranslate(window=g, m=m, n=n), n_t, n_w)
    phase = np.exp(1j * (m * base.t_points[:, None] + n * base.w_points[None, :]))
    return float(np.max(np.abs(shifted.values - phase * base.values)))


def zak_extrema(grid: ZakGrid, E_mask: BasicSupportSet) -> ZakExtrema:
    """min and max of |Zg|^2 over grid rows with t_a in E_mask."""
    rows = E_mask.indicator(grid.t_points)
    if not np.any(rows):
        raise OracleError(f"mask {E_mask} selects no grid points of a {grid.n_t}-point t grid")
    abs2 = np.abs(grid.values[rows]) ** 2
    return ZakExtrema(
        min_abs2=float(np.min(abs2)),
        max_abs2=float(np.max(abs2)),
        n_t=grid.n_t,
        n_w=grid.n_w,
    )
