from argparse import Namespace

from src.executor import execute_task
from src.frames.analysis import analyze_frame_set
from src.intervals.literal import parse_set
from src.log import with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo

from .common import kappa_source, report_result

description = """
Decide whether E is a Weyl-Heisenberg frame set, i.e. whether chi_E generates a
frame {e^{imt} chi_E(t - 2 pi n)}. Each generator polynomial sum_j z^(n_j) is tested
for unit roots.
"""

entrypoint = EntrypointInfo(
    id="check-set",
    description=description,
    parameters=["set"],
)


@with_logging("check-set")
async def run(config: Config, args: Namespace) -> CommandResult:
    E = parse_set(args.set)
    report = await execute_task(
        analyze_frame_set, E, grid=config.grid_params(), kappa=kappa_source(config)
    )
    return report_result(report, config)
