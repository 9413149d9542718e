"""
Configuration loading.

Precedence, lowest first: model defaults, WHFRAMES_* environment variables (a .env
file is read into the environment first), the optional key=value config file,
command line flags.
"""

import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values, load_dotenv
from pydantic import ValidationError

from src.exceptions import ConfigError
from src.log import logger
from src.models.config import Config

ENV_PREFIX = "WHFRAMES_"
CONFIG_KEYS = tuple(Config.model_fields)


def _normalize_key(key: str) -> str:
    key = key.strip().lower()
    prefix = ENV_PREFIX.lower()
    return key[len(prefix):] if key.startswith(prefix) else key


def _from_environment(environ: Mapping[str, str]) -> Dict[str, str]:
    values = {}
    for key in CONFIG_KEYS:
        value = environ.get(f"{ENV_PREFIX}{key.upper()}")
        if value is not None and value != "":
            values[key] = value
    return values


def _from_file(path: Path) -> Dict[str, str]:
    if not path.is_file():
        raise ConfigError(f"config file {path} does not exist", path=str(path))
    values = {}
    for raw_key, value in dotenv_values(path).items():
        key = _normalize_key(raw_key)
        if key not in CONFIG_KEYS:
            raise ConfigError(
                f"unknown config key {raw_key!r} in {path}; expected one of {', '.join(CONFIG_KEYS)}",
                path=str(path),
                key=raw_key,
            )
        if value is None:
            raise ConfigError(f"config key {raw_key!r} in {path} has no value", path=str(path))
        values[key] = value
    return values


def load_config(
    config_file: Optional[Path] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> Config:
    """Merge every configuration source into one validated Config."""
    if environ is None:
        load_dotenv(override=False)
        environ = os.environ

    merged: Dict[str, Any] = _from_environment(environ)
    sources = {key: "env" for key in merged}
    if config_file is not None:
        from_file = _from_file(Path(config_file))
        merged.update(from_file)
        sources.update({key: "file" for key in from_file})
    for key, value in (overrides or {}).items():
        if key not in CONFIG_KEYS:
            raise ConfigError(f"unknown config key {key!r}", key=key)
        if value is not None:
            merged[key] = value
            sources[key] = "flag"

    try:
        config = Config(**merged)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise ConfigError(
            f"invalid value for {field} (from {sources.get(field, 'default')}): {first['msg']}",
            key=field,
        ) from e

    logger.debug(
        "CONFIG | " + " | ".join(f"{key}={getattr(config, key)}" for key in CONFIG_KEYS)
    )
    return config
