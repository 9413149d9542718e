"""
Measured normalization constant kappa: A0 = kappa * m_sq.

For g = chi_[0,2pi) the chain polynomial is 1, so m_sq = M_sq = 1 and the frame-sum
oracle returns kappa directly. A spread between A_est and B_est above
MAX_SPREAD means the modulation truncation is too coarse; the run is repeated with
a doubled m_max before giving up.
"""

from functools import lru_cache

from tenacity import RetryCallState, Retrying, retry_if_exception_type, stop_after_attempt

from src.exceptions import CalibrationError
from src.functions.piecewise import StepFunction, step_to_piecewise
from src.functions.windows import Scaled
from src.log import logger

from .frame_sums import build_test_corpus, frame_sum_bounds

MAX_SPREAD = 0.02
MAX_ATTEMPTS = 3


def _log_failed_attempt(state: RetryCallState) -> None:
    logger.warning(
        f"CALIBRATION_ATTEMPT_FAILED | attempt={state.attempt_number} | Error={state.outcome.exception()}"
    )


@lru_cache(maxsize=16)
def calibrate_kappa(
    m_max: int = 512, tests: int = 20, seed: int = 20240611, scale: complex = 1.0
) -> float:
    """
    kappa = A_est / |scale|^2 for g = scale * chi_[0,2pi).

    Raises CalibrationError when A_est and B_est stay more than 2% apart after
    every retry.
    """
    if scale == 0:
        raise CalibrationError("calibration window must be nonzero", scale=scale)
    window = step_to_piecewise(StepFunction(steps=((1, 0),)))
    if scale != 1.0:
        window = Scaled(window=window, factor=complex(scale))
    corpus = build_test_corpus(tests, seed)

    for attempt in Retrying(
        stop=stop_after_attempt(MAX_ATTEMPTS),
        retry=retry_if_exception_type(CalibrationError),
        after=_log_failed_attempt,
        reraise=True,
    ):
        with attempt:
            truncation = m_max * 2 ** (attempt.retry_state.attempt_number - 1)
            bounds = frame_sum_bounds(window, corpus, truncation)
            if bounds.spread > MAX_SPREAD:
                raise CalibrationError(
                    f"frame sums spread by {bounds.spread:.2%} at m_max={truncation}",
                    A_est=bounds.A_est,
                    B_est=bounds.B_est,
                    m_max=truncation,
                )

    kappa = bounds.A_est / abs(scale) ** 2
    logger.info(
        f"CALIBRATE_KAPPA | kappa={kappa:.10f} | m_max={truncation} | spread={bounds.spread:.3e}"
    )
    return kappa
