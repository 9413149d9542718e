from argparse import Namespace

from src.enums.common import ExitCodeEnum
from src.enums.frames import FunctionSpaceEnum
from src.executor import execute_task
from src.frames.analysis import generator_entries
from src.intervals.decompose import covers_line, decompose
from src.intervals.literal import parse_set
from src.log import log_event, with_logging
from src.models.config import Config
from src.models.entrypoints import CommandResult, EntrypointInfo
from src.models.frames import DecompositionReport

description = """
Split a basic support set into 2pi-translation generators.

Prints the generator bases inside [0, 2pi) with their step-widths, the measure of
the set and whether the bases tile [0, 2pi) (frame space L2(R)) or not (L2(Omega)).
"""

entrypoint = EntrypointInfo(
    id="decompose",
    description=description,
    parameters=["set"],
)


@with_logging("decompose")
async def run(config: Config, args: Namespace) -> CommandResult:
    E = parse_set(args.set)
    d = await execute_task(decompose, E)
    space = FunctionSpaceEnum.WHOLE_LINE if covers_line(d) else FunctionSpaceEnum.SUBSPACE
    report = DecompositionReport(
        input=str(E),
        measure=str(E.measure),
        decomposition=generator_entries(d.generators),
        space=space,
    )
    log_event("DECOMPOSE", set=E, generators=len(d.generators), space=space)
    return CommandResult(
        exit_code=ExitCodeEnum.SUCCESS,
        output=report.model_dump_json(indent=2),
        summary=f"{len(d.generators)} generator(s), measure {report.measure}, space {space}",
    )
