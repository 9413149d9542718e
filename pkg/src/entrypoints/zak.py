from argparse import Namespace

from src.enums.common import ExitCodeEnum, OutputFormatEnum
from src.executor import execute_task
from src.functions.piecewise import load_piecewise
from src.functions.windows import Restricted
from src.intervals.literal import parse_set
from src.log import log_event, with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo
from src.zak.transform import zak_transform

description = """
Zak transform of g (optionally restricted to a set E) on an N x N grid of
[0, 2pi)^2, written as CSV with columns t,w,re,im,abs2.
"""

entrypoint = EntrypointInfo(
    id="zak",
    description=description,
    parameters=["--fn", "--set", "--grid"],
)


@with_logging("zak")
async def run(config: Config, args: Namespace) -> CommandResult:
    g = load_piecewise(args.fn)
    if args.set:
        g = Restricted(window=g, support_set=parse_set(args.set))
    n = config.grid_n
    grid = await execute_task(zak_transform, g, n, n)
    output = await execute_task(grid.to_csv)
    log_event("ZAK", grid=f"{n}x{n}", translates=grid.support_range)
    return CommandResult(
        exit_code=ExitCodeEnum.SUCCESS,
        output=output,
        output_format=OutputFormatEnum.CSV,
        summary=f"Zak transform on a {n}x{n} grid, translates n={grid.support_range[0]}..{grid.support_range[1]}",
    )
