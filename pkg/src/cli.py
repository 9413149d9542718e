"""
Command line front end: `wh-frames <subcommand> ...` or `python -m src <subcommand> ...`.

Reports go to stdout (or --output) as JSON, the zak grid as CSV; a one-line summary
and every diagnostic go to stderr. Exit codes: 0 frame or success, 1 not_frame,
2 marginal, 3 input error, 4 internal inconsistency.
"""

import argparse
import asyncio
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence

from pydantic import ValidationError

from src.config import load_config
from src.entrypoints import analyze, bounds, check_set, decompose, verify, zak
from src.enums.common import ExitCodeEnum
from src.enums.frames import KappaConventionEnum
from src.exceptions import UsageError, WHFramesError
from src.log import log_exception, logger
from src.models.config import Config
from src.models.entrypoints import CommandResult

CONFIG_FLAGS = ("xi_samples", "grid_n", "tol", "kappa_convention", "oracle_m_max", "oracle_tests", "seed", "output")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _config_flags() -> argparse.ArgumentParser:
    parent = _ArgumentParser(add_help=False)
    group = parent.add_argument_group("configuration")
    group.add_argument("--config", type=Path, help="key=value configuration file")
    group.add_argument("--xi-samples", dest="xi_samples", type=int, help="xi samples per generator base")
    group.add_argument("--grid", "--grid-n", dest="grid_n", type=int, help="Zak grid size N (power of two)")
    group.add_argument("--tol", type=float, help="unit-root tolerance relative to sum |a_j|")
    group.add_argument(
        "--kappa-convention",
        dest="kappa_convention",
        choices=[str(c) for c in KappaConventionEnum],
        help="convention of the bounds in the summary line",
    )
    group.add_argument("--oracle-m-max", dest="oracle_m_max", type=int, help="modulation truncation")
    group.add_argument("--oracle-tests", dest="oracle_tests", type=int, help="number of test functions")
    group.add_argument("--seed", type=int, help="seed of the test-function corpus")
    group.add_argument("--output", "-o", type=Path, help="write the report here instead of stdout")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _config_flags()
    parser = _ArgumentParser(
        prog="wh-frames",
        description="Weyl-Heisenberg frames on the (2pi, 1) lattice",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    def add(info, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(
            info.id, parents=[parent], help=help_text, description=info.description
        )

    add(decompose.entrypoint, "split a set into 2pi-translation generators").add_argument("set")
    add(check_set.entrypoint, "decide whether chi_E generates a frame").add_argument("set")
    add(bounds.entrypoint, "frame bounds of a step function").add_argument(
        "--steps", required=True, help='polynomial literal, e.g. "4:0,3:1,2:3"'
    )
    for info, help_text in (
        (analyze.entrypoint, "decide whether g * chi_E generates a frame"),
        (verify.entrypoint, "cross-check analyze against the Zak and frame-sum oracles"),
    ):
        sub = add(info, help_text)
        sub.add_argument("--fn", required=True, type=Path, help="piecewise function file")
        sub.add_argument("--set", required=True, help="basic support set literal")
    sub = add(zak.entrypoint, "Zak transform grid as CSV")
    sub.add_argument("--fn", required=True, type=Path, help="piecewise function file")
    sub.add_argument("--set", help="restrict g to this set first")
    return parser


async def dispatch(command: str, config: Config, args: argparse.Namespace) -> CommandResult:
    logger.info(f"CLI | Command={command}")
    match command:
        case decompose.entrypoint.id:
            return await decompose.run(config, args)
        case check_set.entrypoint.id:
            return await check_set.run(config, args)
        case bounds.entrypoint.id:
            return await bounds.run(config, args)
        case analyze.entrypoint.id:
            return await analyze.run(config, args)
        case zak.entrypoint.id:
            return await zak.run(config, args)
        case verify.entrypoint.id:
            return await verify.run(config, args)
        case _:
            raise UsageError(f"unknown command: {command}")


def _emit(result: CommandResult, config: Config) -> None:
    text = result.output if result.output.endswith("\n") else result.output + "\n"
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text, encoding="utf-8")
    print(result.summary, file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        overrides = {key: getattr(args, key) for key in CONFIG_FLAGS}
        config = load_config(args.config, overrides)
        result = asyncio.run(dispatch(args.command, config, args))
        _emit(result, config)
        return int(result.exit_code)
    except WHFramesError as e:
        log_exception(e, "CLI")
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        log_exception(e, "CLI")
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCodeEnum.INPUT_ERROR)
    except OSError as e:
        log_exception(e, "CLI")
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCodeEnum.INPUT_ERROR)


def main(argv: Optional[List[str]] = None) -> NoReturn:
    sys.exit(run(argv))
