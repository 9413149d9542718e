from typing import List

import numpy as np

from src.exceptions import InconsistencyError, NoRootsError
from src.laurent.polynomial import LaurentPolynomial

MAX_NEWTON_STEPS = 50
NEWTON_STEP_TOL = 1e-14
RESIDUAL_TOL = 1e-9


def polish_roots(descending: np.ndarray, estimates: np.ndarray) -> np.ndarray:
    """
    Newton-polish root estimates of the polynomial with descending coefficients.

    A step is only taken while it does not increase |P|, so multiple roots
    (where P' vanishes too) are left at the best estimate reached.
    """
    derivative = np.polyder(descending)
    polished = []
    for root in np.asarray(estimates, dtype=np.complex128):
        value = np.polyval(descending, root)
        for _ in range(MAX_NEWTON_STEPS):
            slope = np.polyval(derivative, root)
            if slope == 0:
                break
            step = value / slope
            if not np.isfinite(step):
                break
            candidate = root - step
            candidate_value = np.polyval(descending, candidate)
            if abs(candidate_value) > abs(value):
                break
            root, value = candidate, candidate_value
            if abs(step) <= NEWTON_STEP_TOL * max(1.0, abs(root)):
                break
        polished.append(root)
    return np.array(polished, dtype=np.complex128)


def roots(p: LaurentPolynomial) -> List[complex]:
    """
    Roots of the ordinary polynomial z^{-n_min} p(z): companion-matrix eigenvalues
    (numpy.roots) refined by Newton iteration, each checked against the residual bound
    |P(r)| <= 1e-9 * sum|a_j| * max(1, |r|)^deg.
    """
    if p.is_zero or p.span == 0:
        raise NoRootsError(f"no roots defined for the constant polynomial {p}")

    descending = p.ordinary_coefficients()[::-1]
    polished = polish_roots(descending, np.roots(descending))

    scale = p.l1_norm
    for root in polished:
        residual = abs(np.polyval(descending, root))
        bound = RESIDUAL_TOL * scale * max(1.0, abs(root)) ** p.span
        if residual > bound:
            raise InconsistencyError(
                f"root {root} of {p} has residual {residual:.3e} above {bound:.3e}",
                polynomial=str(p),
            )
    return [complex(root) for root in np.sort_complex(polished)]
