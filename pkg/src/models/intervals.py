"""
Exact interval types over rational multiples of pi.

All endpoints are stored as reduced fractions of pi, so translation by 2*pi*n,
residues modulo 2*pi and every set operation are exact. Floats appear only when
a value is handed to numerical code (`__float__`, `bounds`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterator, Tuple

import numpy as np
from pydantic import Field, model_validator

from .base import ProductionBaseModel


class RationalPi(ProductionBaseModel):
    """The real number (numerator / denominator) * pi, kept in lowest terms."""

    numerator: int = Field(description="Signed numerator of the multiple of pi")
    denominator: int = Field(1, ge=1, description="Positive denominator of the multiple of pi")

    @model_validator(mode="before")
    @classmethod
    def reduce_to_lowest_terms(cls, data: Any) -> Any:
        if isinstance(data, dict) and "numerator" in data:
            denominator = data.get("denominator", 1)
            if isinstance(denominator, int) and denominator == 0:
                raise ValueError("denominator must be positive")
            if isinstance(data["numerator"], int) and isinstance(denominator, int):
                reduced = Fraction(data["numerator"], denominator)
                return {
                    "numerator": reduced.numerator,
                    "denominator": reduced.denominator,
                }
        return data

    @classmethod
    def of(cls, value: Fraction | int | str) -> RationalPi:
        """Build from a multiple of pi, e.g. RationalPi.of("5/2") is 5/2 pi."""
        fraction = Fraction(value)
        return cls(numerator=fraction.numerator, denominator=fraction.denominator)

    @property
    def fraction(self) -> Fraction:
        """The multiple of pi as an exact fraction."""
        return Fraction(self.numerator, self.denominator)

    def __float__(self) -> float:
        return float(self.fraction) * math.pi

    def __add__(self, other: RationalPi) -> RationalPi:
        return RationalPi.of(self.fraction + other.fraction)

    def __sub__(self, other: RationalPi) -> RationalPi:
        return RationalPi.of(self.fraction - other.fraction)

    def __neg__(self) -> RationalPi:
        return RationalPi.of(-self.fraction)

    def __lt__(self, other: RationalPi) -> bool:
        return self.fraction < other.fraction

    def __le__(self, other: RationalPi) -> bool:
        return self.fraction <= other.fraction

    def __gt__(self, other: RationalPi) -> bool:
        return self.fraction > other.fraction

    def __ge__(self, other: RationalPi) -> bool:
        return self.fraction >= other.fraction

    def shifted(self, periods: int) -> RationalPi:
        """self + 2*pi*periods."""
        return RationalPi.of(self.fraction + 2 * periods)

    def __str__(self) -> str:
        fraction = self.fraction
        if fraction == 0:
            return "0"
        if fraction == 1:
            return "pi"
        if fraction == -1:
            return "-pi"
        return f"{fraction}pi"


ZERO = RationalPi(numerator=0)
TWO_PI = RationalPi(numerator=2)


class Interval(ProductionBaseModel):
    """
    A bounded interval with rational-in-pi endpoints.

    Set algebra always treats the interval as half-open [lo, hi); the closedness
    flags are kept for display and for pointwise evaluation of piecewise functions.
    """

    lo: RationalPi
    hi: RationalPi
    lo_closed: bool = True
    hi_closed: bool = False

    @model_validator(mode="after")
    def validate_positive_length(self):
        if not self.lo < self.hi:
            raise ValueError(
                f"Interval endpoints must satisfy lo < hi, got lo={self.lo}, hi={self.hi}"
            )
        return self

    @classmethod
    def half_open(cls, lo: Fraction | int | str, hi: Fraction | int | str) -> Interval:
        """[lo*pi, hi*pi) from multiples of pi."""
        return cls(lo=RationalPi.of(lo), hi=RationalPi.of(hi))

    @property
    def length(self) -> RationalPi:
        return self.hi - self.lo

    @property
    def bounds(self) -> Tuple[float, float]:
        return float(self.lo), float(self.hi)

    def canonical(self) -> Interval:
        """The half-open representative [lo, hi)."""
        return Interval(lo=self.lo, hi=self.hi)

    def translate(self, periods: int) -> Interval:
        """self + 2*pi*periods, keeping the closedness flags."""
        return self.model_copy(
            update={"lo": self.lo.shifted(periods), "hi": self.hi.shifted(periods)}
        )

    def contains_array(self, ts: np.ndarray) -> np.ndarray:
        """Pointwise membership honouring the closedness flags."""
        lo, hi = self.bounds
        lower = ts >= lo if self.lo_closed else ts > lo
        upper = ts <= hi if self.hi_closed else ts < hi
        return lower & upper

    def closure_contains(self, t: float, atol: float = 1e-12) -> bool:
        lo, hi = self.bounds
        slack = atol * max(1.0, abs(t))
        return lo - slack <= t <= hi + slack

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"


class BasicSupportSet(ProductionBaseModel):
    """A finite disjoint union of bounded intervals, sorted and non-mergeable."""

    parts: Tuple[Interval, ...] = Field(
        min_length=1, description="Sorted, pairwise disjoint, non-abutting parts"
    )

    @model_validator(mode="after")
    def validate_canonical_parts(self):
        for left, right in zip(self.parts, self.parts[1:]):
            if not left.hi < right.lo:
                raise ValueError(
                    f"Parts must be sorted, disjoint and non-abutting: {left} then {right}"
                )
        return self

    @property
    def measure(self) -> RationalPi:
        total = Fraction(0)
        for part in self.parts:
            total += part.length.fraction
        return RationalPi.of(total)

    @property
    def spans(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        """The half-open (lo, hi) pairs as multiples of pi, ignoring display flags."""
        return tuple((part.lo.fraction, part.hi.fraction) for part in self.parts)

    @property
    def hull(self) -> Tuple[float, float]:
        return float(self.parts[0].lo), float(self.parts[-1].hi)

    def same_set(self, other: BasicSupportSet) -> bool:
        """Equality as half-open unions."""
        return self.spans == other.spans

    def translate(self, periods: int) -> BasicSupportSet:
        return BasicSupportSet(parts=tuple(p.translate(periods) for p in self.parts))

    def indicator(self, ts: np.ndarray) -> np.ndarray:
        """Half-open indicator chi_E evaluated pointwise."""
        mask = np.zeros(np.shape(ts), dtype=bool)
        for part in self.parts:
            lo, hi = part.bounds
            mask |= (ts >= lo) & (ts < hi)
        return mask

    def closure_contains(self, t: float, atol: float = 1e-12) -> bool:
        return any(part.closure_contains(t, atol) for part in self.parts)

    def breakpoints(self) -> Tuple[float, ...]:
        points = []
        for part in self.parts:
            points.extend(part.bounds)
        return tuple(points)

    def __str__(self) -> str:
        return " U ".join(str(part) for part in self.parts)


class Generator(ProductionBaseModel):
    """
    A 2pi-translation generator: a base interval inside [0, 2pi) together with the
    step-widths n such that base + 2*pi*n lies in the decomposed set.
    """

    base: Interval
    widths: Tuple[int, ...] = Field(min_length=1, description="Strictly increasing step-widths")

    @model_validator(mode="after")
    def validate_generator(self):
        if self.base.lo < ZERO or self.base.hi > TWO_PI:
            raise ValueError(f"Generator base {self.base} is not contained in [0,2pi)")
        if any(b <= a for a, b in zip(self.widths, self.widths[1:])):
            raise ValueError(f"Step-widths must be strictly increasing, got {self.widths}")
        return self

    def translates(self) -> Iterator[Interval]:
        for width in self.widths:
            yield self.base.canonical().translate(width)


class Decomposition(ProductionBaseModel):
    generators: Tuple[Generator, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def validate_disjoint_bases(self):
        bases = sorted((g.base for g in self.generators), key=lambda b: b.lo.fraction)
        for left, right in zip(bases, bases[1:]):
            if right.lo < left.hi:
                raise ValueError(f"Generator bases overlap: {left} and {right}")
        return self

    @property
    def bases(self) -> Tuple[Interval, ...]:
        return tuple(g.base for g in self.generators)
