from . import decompose, check_set, bounds, analyze, zak, verify

__all__ = [
    "decompose",
    "check_set",
    "bounds",
    "analyze",
    "zak",
    "verify",
]
