"""
Decomposition of a basic support set into 2pi-translation generators.

The breakpoints of [0, 2pi) are the residues of every endpoint of E together with
0 and 2pi. Every open cell between consecutive breakpoints is then translated by
2*pi*n either entirely into one part of E or entirely out of E, so the step-widths
of a cell can be read off part by part with exact arithmetic.
"""

import math
from fractions import Fraction
from typing import List, Tuple

from src.exceptions import InvalidDecompositionError
from src.intervals.algebra import normalize_set, tau_2pi
from src.log import log_event
from src.models.intervals import (
    BasicSupportSet,
    Decomposition,
    Generator,
    Interval,
    RationalPi,
)


def _breakpoints(E: BasicSupportSet) -> List[Fraction]:
    points = {Fraction(0), Fraction(2)}
    for part in E.parts:
        for endpoint in (part.lo, part.hi):
            residue, _ = tau_2pi(endpoint)
            points.add(residue.fraction)
    return sorted(points)


def _cell_widths(E: BasicSupportSet, lo: Fraction, hi: Fraction) -> Tuple[int, ...]:
    """All n with [lo, hi) + 2*pi*n inside E (multiples of pi)."""
    widths: List[int] = []
    for part in E.parts:
        first = math.ceil((part.lo.fraction - lo) / 2)
        last = math.floor((part.hi.fraction - hi) / 2)
        widths.extend(range(first, last + 1))
    return tuple(sorted(widths))


def decompose(E: BasicSupportSet) -> Decomposition:
    """Split E into generators; adjacent cells with equal step-widths share one base."""
    points = _breakpoints(E)

    cells: List[Tuple[Fraction, Fraction, Tuple[int, ...]]] = []
    for lo, hi in zip(points, points[1:]):
        widths = _cell_widths(E, lo, hi)
        if not widths:
            continue
        if cells and cells[-1][1] == lo and cells[-1][2] == widths:
            cells[-1] = (cells[-1][0], hi, widths)
        else:
            cells.append((lo, hi, widths))

    generators = tuple(
        Generator(base=Interval.half_open(lo, hi), widths=widths)
        for lo, hi, widths in cells
    )
    log_event(
        "DECOMPOSE",
        parts=len(E.parts),
        breakpoints=len(points),
        generators=len(generators),
    )
    return Decomposition(generators=generators)


def reconstruct(d: Decomposition) -> BasicSupportSet:
    """Exact union of every base + 2*pi*n; overlapping translates are rejected."""
    translates = sorted(
        (interval for generator in d.generators for interval in generator.translates()),
        key=lambda interval: interval.lo.fraction,
    )
    for left, right in zip(translates, translates[1:]):
        if right.lo < left.hi:
            raise InvalidDecompositionError(
                f"invalid decomposition: translates {left} and {right} overlap"
            )
    return normalize_set(translates)


def covers_line(d: Decomposition) -> bool:
    """True iff the generator bases tile [0, 2pi), i.e. the translates cover the line."""
    bases = sorted(d.bases, key=lambda base: base.lo.fraction)
    position = RationalPi(numerator=0)
    for base in bases:
        if base.lo != position:
            return False
        position = base.hi
    return position == RationalPi(numerator=2)
