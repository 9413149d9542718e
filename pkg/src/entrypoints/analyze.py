from argparse import Namespace

from src.executor import execute_task
from src.frames.analysis import analyze_continuous
from src.functions.piecewise import load_piecewise
from src.intervals.literal import parse_set
from src.log import with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo

from .common import kappa_source, report_result

description = """
Decide whether g * chi_E is a mother Weyl-Heisenberg frame window, for g read from
a piecewise file and E a basic support set. The characteristic chains of g are
scanned over the closure of every generator base.
"""

entrypoint = EntrypointInfo(
    id="analyze",
    description=description,
    parameters=["--fn", "--set"],
)


@with_logging("analyze")
async def run(config: Config, args: Namespace) -> CommandResult:
    g = load_piecewise(args.fn)
    E = parse_set(args.set)
    report = await execute_task(
        analyze_continuous, g, E, grid=config.grid_params(), kappa=kappa_source(config)
    )
    return report_result(report, config)
