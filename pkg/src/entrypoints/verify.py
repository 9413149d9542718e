import math
from argparse import Namespace
from typing import List

from src.enums.common import ExitCodeEnum
from src.enums.frames import FunctionSpaceEnum, VerdictEnum
from src.executor import execute_task, execute_tasks
from src.frames.analysis import analyze_continuous
from src.functions.piecewise import load_piecewise
from src.functions.windows import Restricted
from src.intervals.algebra import normalize_set
from src.intervals.decompose import decompose
from src.intervals.literal import parse_set
from src.log import log_event, with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo
from src.models.frames import FrameReport
from src.models.zak import ConsistencyCheck, OracleBounds, VerifyReport, ZakExtrema
from src.zak.frame_sums import build_test_corpus, frame_sum_bounds
from src.zak.transform import unitarity_check, zak_extrema, zak_transform

from .common import kappa_source

description = """
Run analyze on g * chi_E and compare the verdict with independent measurements:
the Zak transform minimum over the generator bases (and its behaviour when the grid
is doubled), the unitarity of the discretized Zak transform, and frame sums over a
seeded corpus of smooth test functions. Exits 4 when the two sides disagree.
"""

entrypoint = EntrypointInfo(
    id="verify",
    description=description,
    parameters=["--fn", "--set"],
)

BOUND_SLACK = 0.02
GRID_SLACK = 5.0
UNITARITY_TOL = 1e-6
HALVING_FLOOR = 1e-20


def consistency_checks(
    analysis: FrameReport,
    oracle: OracleBounds,
    kappa: float,
    zak: ZakExtrema,
    zak_doubled: ZakExtrema,
    unitarity_error: float,
) -> List[ConsistencyCheck]:
    """Each check compares one analysis quantity with its oracle counterpart."""
    two_pi = 2.0 * math.pi
    resolution = GRID_SLACK / zak.n_w
    checks = [
        ConsistencyCheck(
            name="unitarity",
            passed=unitarity_error <= UNITARITY_TOL,
            detail=f"relative error {unitarity_error:.3e} (limit {UNITARITY_TOL:.0e})",
        ),
        ConsistencyCheck(
            name="upper_bound",
            passed=oracle.B_est <= kappa * analysis.M_sq * (1 + BOUND_SLACK),
            detail=f"B_est={oracle.B_est:.6e} vs kappa*M_sq={kappa * analysis.M_sq:.6e}",
        ),
    ]

    match analysis.verdict:
        case VerdictEnum.FRAME:
            floor = analysis.m_sq / two_pi * (1 - resolution)
            ceiling = analysis.M_sq / two_pi * (1 + resolution)
            checks.append(
                ConsistencyCheck(
                    name="zak_min",
                    passed=zak.min_abs2 >= floor,
                    detail=f"min |Zg|^2={zak.min_abs2:.6e} vs m_sq/2pi={analysis.m_sq / two_pi:.6e}",
                )
            )
            checks.append(
                ConsistencyCheck(
                    name="zak_max",
                    passed=zak.max_abs2 <= ceiling,
                    detail=f"max |Zg|^2={zak.max_abs2:.6e} vs M_sq/2pi={analysis.M_sq / two_pi:.6e}",
                )
            )
            # random tests bound A from above only on L2(R)
            if analysis.space is FunctionSpaceEnum.WHOLE_LINE:
                checks.append(
                    ConsistencyCheck(
                        name="lower_bound",
                        passed=oracle.A_est >= kappa * analysis.m_sq * (1 - BOUND_SLACK),
                        detail=f"A_est={oracle.A_est:.6e} vs kappa*m_sq={kappa * analysis.m_sq:.6e}",
                    )
                )
        case VerdictEnum.NOT_FRAME:
            checks.append(
                ConsistencyCheck(
                    name="zak_degeneration",
                    passed=zak_doubled.min_abs2 <= 0.5 * zak.min_abs2 + HALVING_FLOOR,
                    detail=(
                        f"min |Zg|^2={zak.min_abs2:.3e} at N={zak.n_w}, "
                        f"{zak_doubled.min_abs2:.3e} at N={zak_doubled.n_w}"
                    ),
                )
            )
    return checks


@with_logging("verify")
async def run(config: Config, args: Namespace) -> CommandResult:
    g = load_piecewise(args.fn)
    E = parse_set(args.set)
    window = Restricted(window=g, support_set=E)
    mask = normalize_set(gen.base for gen in decompose(E).generators)
    n = config.grid_n

    kappa = await execute_task(kappa_source(config))
    corpus = build_test_corpus(config.oracle_tests, config.seed, support=E.hull)
    results = await execute_tasks(
        {
            "analysis": lambda: analyze_continuous(g, E, grid=config.grid_params(), kappa=kappa),
            "zak": lambda: zak_extrema(zak_transform(window, n, n), mask),
            "zak_doubled": lambda: zak_extrema(zak_transform(window, 2 * n, 2 * n), mask),
            "unitarity": lambda: unitarity_check(window, n, n),
            "oracle": lambda: frame_sum_bounds(window, corpus, config.oracle_m_max),
        }
    )

    analysis: FrameReport = results["analysis"]
    checks = consistency_checks(
        analysis,
        results["oracle"],
        kappa,
        results["zak"],
        results["zak_doubled"],
        results["unitarity"],
    )
    consistent = all(check.passed for check in checks)
    report = VerifyReport(
        analysis=analysis,
        oracle=results["oracle"],
        zak_min=results["zak"].min_abs2,
        zak_max=results["zak"].max_abs2,
        zak_min_doubled=results["zak_doubled"].min_abs2,
        grid=(n, n),
        kappa=kappa,
        checks=checks,
        consistent=consistent,
    )
    failed = [check.name for check in checks if not check.passed]
    log_event("VERIFY", set=E, verdict=analysis.verdict, consistent=consistent, failed=failed)

    exit_code = ExitCodeEnum.for_verdict(analysis.verdict) if consistent else ExitCodeEnum.INCONSISTENT
    summary = f"verdict={analysis.verdict} | consistent={consistent}"
    if failed:
        summary += f" | failed checks: {', '.join(failed)}"
    return CommandResult(
        exit_code=exit_code,
        output=report.model_dump_json(indent=2),
        summary=summary,
    )
