"""
Process-wide logger for the library and the command line.

Records go to a daily rotating file under LogConfig.LOG_DIR as
"TAG | key=value | ..." lines. stdout is reserved for reports, so the console
fallback (used when the log directory is not writable) writes to stderr.
"""

import logging
import os
import sys
import threading
import time
from datetime import datetime, timezone
from functools import wraps
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Any, Awaitable, Callable, Optional

from dotenv import load_dotenv

load_dotenv()

LOG_NAME = "wh_frames"


class LogConfig:
    LOG_DIR = Path(os.getenv("WHFRAMES_LOG_DIR", Path(__file__).resolve().parent.parent / "logs"))
    LOG_FILE = LOG_DIR / f"{LOG_NAME}.log"
    LOG_TTL_DAYS = int(os.getenv("WHFRAMES_LOG_TTL_DAYS", "5"))
    LOG_LEVEL = os.getenv("WHFRAMES_LOG_LEVEL", "INFO").upper()
    LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s | %(message)s"
    DATE_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


_logger_lock = threading.Lock()
_logger_instance: Optional[logging.Logger] = None


def _level(name: str) -> int:
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO


def _stderr_logger(reason: Exception) -> logging.Logger:
    fallback = logging.getLogger(f"{LOG_NAME}.fallback")
    fallback.setLevel(logging.WARNING)
    if not fallback.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s [%(levelname)s] %(message)s"))
        fallback.addHandler(handler)
    fallback.propagate = False
    fallback.warning(f"LOG_SETUP_FAILED | dir={LogConfig.LOG_DIR} | Error={reason}")
    return fallback


def setup_logger() -> logging.Logger:
    """Create the shared logger once; later calls return the same instance."""
    global _logger_instance

    if _logger_instance is not None:
        return _logger_instance

    with _logger_lock:
        if _logger_instance is not None:
            return _logger_instance
        try:
            LogConfig.LOG_DIR.mkdir(parents=True, exist_ok=True)
            handler = TimedRotatingFileHandler(
                LogConfig.LOG_FILE,
                when="midnight",
                backupCount=LogConfig.LOG_TTL_DAYS,
                utc=True,
                encoding="utf-8",
            )
            formatter = logging.Formatter(fmt=LogConfig.LOG_FORMAT, datefmt=LogConfig.DATE_FORMAT)
            formatter.converter = time.gmtime
            handler.setFormatter(formatter)

            logger = logging.getLogger(LOG_NAME)
            logger.setLevel(_level(LogConfig.LOG_LEVEL))
            logger.handlers.clear()
            logger.addHandler(handler)
            logger.propagate = False
            logger.info(f"LOGGER_READY | pid={os.getpid()} | level={logging.getLevelName(logger.level)}")
            _logger_instance = logger
        except OSError as e:
            _logger_instance = _stderr_logger(e)
        return _logger_instance


def cleanup_old_logs() -> None:
    """Remove rotated wh_frames logs older than LOG_TTL_DAYS."""
    if not LogConfig.LOG_DIR.is_dir():
        return

    cutoff = time.time() - LogConfig.LOG_TTL_DAYS * 24 * 3600
    for path in LogConfig.LOG_DIR.glob(f"{LOG_NAME}.log*"):
        try:
            if path.is_file() and path.stat().st_mtime < cutoff:
                path.unlink()
                logger.debug(f"LOG_REMOVED | file={path.name}")
        except OSError as e:
            logger.warning(f"LOG_CLEANUP_FAILED | file={path.name} | Error={e}")


logger = setup_logger()
cleanup_old_logs()


def _fields(**kwargs) -> str:
    return " | ".join(f"{k}={v}" for k, v in kwargs.items() if v is not None)


def log_event(event: str, **kwargs) -> None:
    """
    Log one analysis step.

    Args:
        event: upper-case tag, e.g. DECOMPOSE or ANALYZE_CONTINUOUS
        **kwargs: fields rendered as key=value; None values are left out
    """
    details = _fields(**kwargs)
    logger.info(f"{event} | {details}" if details else event)


def log_exception(error: Exception, context: str = "") -> None:
    """Library errors are logged through their to_dict(); anything else by type and message."""
    from src.exceptions import WHFramesError

    if isinstance(error, WHFramesError):
        logger.error(f"WHFRAMES_ERROR | {context} | {_fields(**error.to_dict())}")
    else:
        logger.error(f"EXCEPTION | {context} | Type={type(error).__name__} | Message={error}")


def with_logging(entrypoint_id: str):
    """
    ENTRY / SUCCESS / ERROR records around an async subcommand.

    SUCCESS carries the exit code of the returned CommandResult, so verdicts can be
    followed in the log without the report itself.
    """

    def decorator(func: Callable[..., Awaitable[Any]]):
        @wraps(func)
        async def wrapper(*args, **kwargs):
            started = datetime.now(timezone.utc)
            logger.info(f"ENTRY | Entrypoint={entrypoint_id}")
            try:
                result = await func(*args, **kwargs)
            except Exception as e:
                duration = (datetime.now(timezone.utc) - started).total_seconds()
                log_exception(e, f"Entrypoint={entrypoint_id}")
                logger.error(
                    f"ERROR | Entrypoint={entrypoint_id} | Duration={duration:.3f}s | "
                    f"Error={type(e).__name__}: {e}"
                )
                raise

            duration = (datetime.now(timezone.utc) - started).total_seconds()
            exit_code = getattr(result, "exit_code", None)
            logger.info(
                f"SUCCESS | Entrypoint={entrypoint_id} | Duration={duration:.3f}s | "
                f"ExitCode={int(exit_code) if exit_code is not None else '-'}"
            )
            return result

        return wrapper

    return decorator
