from . import (
    base,
    intervals,
    laurent,
    frames,
    zak,
    config,
    entrypoints,
)

__all__ = [
    "base",
    "intervals",
    "laurent",
    "frames",
    "zak",
    "config",
    "entrypoints",
]
