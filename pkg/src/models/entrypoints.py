from typing import List

from pydantic import Field

from src.enums.common import ExitCodeEnum, OutputFormatEnum
from src.models.base import ProductionBaseModel


class EntrypointInfo(ProductionBaseModel):
    """Metadata of one command line subcommand."""

    id: str = Field(description="Subcommand name as typed on the command line")
    description: str
    parameters: List[str] = Field(default_factory=list, description="Positional and flag arguments")


class CommandResult(ProductionBaseModel):
    """What a subcommand hands back to the dispatcher."""

    exit_code: ExitCodeEnum
    output: str = Field(description="Document written to stdout or the configured output file")
    output_format: OutputFormatEnum = OutputFormatEnum.JSON
    summary: str = Field(description="One-line human summary for stderr")
