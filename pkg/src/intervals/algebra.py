import math
from typing import Iterable, List, Tuple

from src.exceptions import EmptySetError
from src.models.intervals import BasicSupportSet, Interval, RationalPi


def normalize_set(raw: Iterable[Interval]) -> BasicSupportSet:
    """
    Canonicalize a union of intervals: sort by lower endpoint and merge every
    overlapping or abutting pair. Merging compares half-open spans; the
    closedness flags of the surviving extreme endpoints are kept for display.
    """
    intervals = sorted(raw, key=lambda part: (part.lo.fraction, part.hi.fraction))
    if not intervals:
        raise EmptySetError("empty set: no intervals given")

    merged: List[Interval] = [intervals[0]]
    for part in intervals[1:]:
        current = merged[-1]
        if part.lo <= current.hi:
            if part.hi > current.hi:
                hi, hi_closed = part.hi, part.hi_closed
            elif part.hi == current.hi:
                hi, hi_closed = current.hi, current.hi_closed or part.hi_closed
            else:
                hi, hi_closed = current.hi, current.hi_closed
            merged[-1] = current.model_copy(update={"hi": hi, "hi_closed": hi_closed})
        else:
            merged.append(part)

    normalized = BasicSupportSet(parts=tuple(merged))
    if normalized.measure.fraction <= 0:
        raise EmptySetError("empty set: union has measure zero")
    return normalized


def tau_2pi(x: RationalPi) -> Tuple[RationalPi, int]:
    """Split x = residue + 2*pi*n exactly with 0 <= residue < 2*pi."""
    periods = math.floor(x.fraction / 2)
    residue = RationalPi.of(x.fraction - 2 * periods)
    return residue, periods


def translate_set(E: BasicSupportSet, periods: int) -> BasicSupportSet:
    """E + 2*pi*periods."""
    return E.translate(periods)

