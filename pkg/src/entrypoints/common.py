from functools import partial
from typing import Callable

from src.enums.common import ExitCodeEnum
from src.enums.frames import VerdictEnum
from src.models.config import Config
from src.models.entrypoints import CommandResult
from src.models.frames import FrameReport
from src.zak.calibration import calibrate_kappa


def kappa_source(config: Config) -> Callable[[], float]:
    """Calibration with the configured oracle settings, run only if a frame verdict needs it."""
    return partial(calibrate_kappa, config.oracle_m_max, config.oracle_tests, config.seed)


def summarize_report(report: FrameReport, config: Config) -> str:
    parts = [f"verdict={report.verdict}", f"space={report.space}", f"m_sq={report.m_sq:.6g}"]
    if report.verdict is VerdictEnum.FRAME:
        bounds = report.bounds[config.kappa_convention]
        parts.append(f"A0={bounds.A0:.6g} B0={bounds.B0:.6g} ({bounds.convention}, kappa={bounds.kappa:.6g})")
    elif report.witness is not None:
        w = report.witness
        xi = "" if w.xi is None else f"xi={w.xi:.12g} "
        parts.append(f"witness: generator {w.generator_index} {xi}theta={w.theta:.12g}")
    return " | ".join(parts)


def report_result(report: FrameReport, config: Config) -> CommandResult:
    return CommandResult(
        exit_code=ExitCodeEnum.for_verdict(report.verdict),
        output=report.model_dump_json(indent=2),
        summary=summarize_report(report, config),
    )
