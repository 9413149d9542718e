from argparse import Namespace

from src.executor import execute_task
from src.frames.analysis import analyze_step
from src.functions.piecewise import StepFunction
from src.laurent.polynomial import parse_polynomial
from src.log import with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo

from .common import kappa_source, report_result

description = """
Frame bounds of a step function g = sum_j a_j chi_[0,2pi)+2pi n_j, given as the
polynomial literal "a_1:n_1,a_2:n_2,...", e.g. "4:0,3:1,2:3".
"""

entrypoint = EntrypointInfo(
    id="bounds",
    description=description,
    parameters=["--steps"],
)


@with_logging("bounds")
async def run(config: Config, args: Namespace) -> CommandResult:
    s = StepFunction.from_polynomial(parse_polynomial(args.steps))
    report = await execute_task(
        analyze_step, s, grid=config.grid_params(), kappa=kappa_source(config)
    )
    return report_result(report, config)
