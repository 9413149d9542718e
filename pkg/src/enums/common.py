from enum import Enum, IntEnum

from src.enums.frames import VerdictEnum


class ExitCodeEnum(IntEnum):
    """Process exit codes of the command line front end."""

    SUCCESS = 0
    NOT_FRAME = 1
    MARGINAL = 2
    INPUT_ERROR = 3
    INCONSISTENT = 4

    @classmethod
    def for_verdict(cls, verdict: VerdictEnum) -> "ExitCodeEnum":
        match verdict:
            case VerdictEnum.FRAME:
                return cls.SUCCESS
            case VerdictEnum.NOT_FRAME:
                return cls.NOT_FRAME
            case VerdictEnum.MARGINAL:
                return cls.MARGINAL


class OutputFormatEnum(str, Enum):
    JSON = "json"
    CSV = "csv"

    def __str__(self):
        return self.value
