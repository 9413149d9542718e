"""
Truncated frame-operator sums S(f) = sum_{|m|<=M, n} |<f, M_m T_2pin g>|^2 / ||f||^2.

<f, M_m T_2pin g> = int_0^{2pi} h_n(t) e^{-imt} dt with the periodization
h_n(t) = sum_k f(t + 2pi k) conj(g(t + 2pi (k - n))), so every inner product for a
fixed n is a Fourier coefficient of one function on [0, 2pi).
"""

import math
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from src.exceptions import OracleError, PreconditionError
from src.functions.windows import TrigBumpWindow, Window
from src.log import logger
from src.models.zak import OracleBounds

from .transform import residue_breakpoints, translate_range

TWO_PI = 2.0 * math.pi
NODES_PER_PERIOD = 4096
CHUNK_NODES = 257
ENDPOINT_NUDGE = 1e-9
MIN_M_MAX = 32


@lru_cache(maxsize=64)
def _simpson_weights(count: int) -> np.ndarray:
    """Unit-spacing Simpson weights for `count` equispaced nodes."""
    return integrate.simpson(np.eye(count), dx=1.0, axis=-1)


@lru_cache(maxsize=4)
def _quadrature(edges: Tuple[float, ...], m_max: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Composite Simpson nodes and weights over [0, 2pi) split at `edges`, and e^{-imt} at the nodes."""
    nodes: List[np.ndarray] = []
    weights: List[np.ndarray] = []
    for c, d in zip(edges, edges[1:]):
        target = max(2, math.ceil(NODES_PER_PERIOD * (d - c) / TWO_PI))
        chunks = math.ceil(target / (CHUNK_NODES - 1))
        chunk_edges = np.linspace(c, d, chunks + 1)
        count = 2 * math.ceil(target / (2 * chunks)) + 1
        for a, b in zip(chunk_edges, chunk_edges[1:]):
            nudge = ENDPOINT_NUDGE * (b - a)
            ts = np.linspace(a + nudge, b - nudge, count)
            nodes.append(ts)
            weights.append(_simpson_weights(count) * (ts[1] - ts[0]))
    ts = np.concatenate(nodes)
    modes = np.arange(-m_max, m_max + 1)
    return ts, np.concatenate(weights), np.exp(-1j * np.multiply.outer(ts, modes))


def translation_range(f: Window, g: Window) -> Tuple[int, int]:
    """Every n for which supp f and supp g + 2pi n overlap in a set of positive length."""
    f_lo, f_hi = f.support
    g_lo, g_hi = g.support
    return math.floor((f_lo - g_hi) / TWO_PI) + 1, math.ceil((f_hi - g_lo) / TWO_PI) - 1


def frame_sum(f: Window, g: Window, m_max: int, n_max: Optional[int] = None) -> Tuple[float, int]:
    """S(f) for one test function, with the largest |n| that entered the sum."""
    edges = tuple(float(x) for x in residue_breakpoints(f, g))
    ts, weights, phase = _quadrature(edges, m_max)

    k_lo, k_hi = translate_range(f)
    periods = np.arange(k_lo, k_hi + 1)
    shifted = ts[:, None] + TWO_PI * periods[None, :]
    f_values = f.evaluate_array(shifted)
    f_norm = float(weights @ np.sum(np.abs(f_values) ** 2, axis=1))
    if f_norm <= 0.0:
        raise OracleError("test function has zero norm on the quadrature nodes")

    n_lo, n_hi = translation_range(f, g)
    if n_max is not None:
        n_lo, n_hi = max(n_lo, -n_max), min(n_hi, n_max)
    translations = np.arange(n_lo, n_hi + 1)
    if translations.size == 0:
        return 0.0, 0

    periodized = np.stack(
        [
            np.sum(f_values * np.conj(g.evaluate_array(shifted - TWO_PI * n)), axis=1)
            for n in translations
        ]
    )
    coefficients = (periodized * weights[None, :]) @ phase
    total = float(np.sum(np.abs(coefficients) ** 2))
    return total / f_norm, int(np.max(np.abs(translations)))


def frame_sum_bounds(
    g: Window, tests: Sequence[Window], m_max: int, n_max: Optional[int] = None
) -> OracleBounds:
    """
    min and max of S(f) over the test functions.

    Without n_max every translate overlapping a test support is summed, which is exact
    in n for compactly supported windows. Random tests only bracket the true bounds:
    A_est is an upper estimate of the optimal lower bound.
    """
    if not tests:
        raise OracleError("frame_sum_bounds needs at least one test function")
    if m_max < MIN_M_MAX:
        raise PreconditionError(f"m_max must be at least {MIN_M_MAX}, got {m_max}", m_max=m_max)

    sums = []
    used_n = 0
    for f in tests:
        value, reach = frame_sum(f, g, m_max, n_max)
        sums.append(value)
        used_n = max(used_n, reach)

    bounds = OracleBounds(
        A_est=min(sums),
        B_est=max(sums),
        m_max=m_max,
        n_max=used_n if n_max is None else n_max,
        test_count=len(tests),
    )
    logger.info(
        f"FRAME_SUMS | tests={len(tests)} | m_max={m_max} | n_max={bounds.n_max} "
        f"| A_est={bounds.A_est:.10e} | B_est={bounds.B_est:.10e}"
    )
    return bounds


def build_test_corpus(
    count: int,
    seed: int,
    support: Tuple[float, float] = (0.0, TWO_PI),
    degree: int = 4,
) -> List[TrigBumpWindow]:
    """Seeded random trigonometric polynomials of the given degree times a smooth bump on `support`."""
    if count < 1:
        raise PreconditionError(f"test corpus needs at least one function, got {count}")
    lo, hi = support
    if not hi > lo:
        raise PreconditionError(f"empty test support ({lo}, {hi})")
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(count):
        coefficients = rng.normal(size=2 * degree + 1) + 1j * rng.normal(size=2 * degree + 1)
        corpus.append(
            TrigBumpWindow(
                coefficients=tuple(complex(c) for c in coefficients),
                lo=float(lo),
                hi=float(hi),
            )
        )
    return corpus
