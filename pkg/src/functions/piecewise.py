"""
Piecewise-defined functions and step functions.

File format, one piece per line, "#" starting a comment:

    [0,2pi)         : sin(2*t)/2
    [15/4pi,27/4pi) : 2*(sin(t)+cos(t))

Pieces evaluate with their own open/closed endpoint flags; outside every piece the
function is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import List, Tuple

import numpy as np

from src.exceptions import (
    ExpressionSyntaxError,
    InvalidPiecewiseError,
    PiecewiseFileError,
    SetLiteralError,
)
from src.functions.expr import BinOp, Expr, ImagUnit, Neg, Num, evaluate, format_expr
from src.functions.parser import parse_expr
from src.functions.windows import Window, snap_to_breakpoints
from src.intervals.algebra import normalize_set
from src.intervals.literal import parse_interval
from src.laurent.polynomial import LaurentPolynomial, reverse
from src.models.intervals import BasicSupportSet, Interval

MISMATCH_TOL = 1e-9


@dataclass(frozen=True)
class Piece:
    interval: Interval
    expr: Expr

    def __str__(self) -> str:
        return f"{self.interval} : {format_expr(self.expr)}"


@dataclass(frozen=True)
class BoundaryMismatch:
    """A jump between two abutting pieces."""

    t: float
    left_piece: int
    right_piece: int
    jump: float

    def __str__(self) -> str:
        return (
            f"pieces {self.left_piece} and {self.right_piece} disagree by "
            f"{self.jump:.3e} at t={self.t!r}"
        )


@dataclass(frozen=True)
class PiecewiseFunction(Window):
    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        if not self.pieces:
            raise InvalidPiecewiseError("a piecewise function needs at least one piece")
        ordered = sorted(self.pieces, key=lambda piece: piece.interval.lo.fraction)
        for left, right in zip(ordered, ordered[1:]):
            a, b = left.interval, right.interval
            if b.lo < a.hi or (b.lo == a.hi and a.hi_closed and b.lo_closed):
                raise InvalidPiecewiseError(f"pieces {a} and {b} overlap")

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return np.unique(
            np.array([bound for piece in self.pieces for bound in piece.interval.bounds])
        )

    @property
    def support(self) -> Tuple[float, float]:
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    @property
    def support_set(self) -> BasicSupportSet:
        return normalize_set(piece.interval.canonical() for piece in self.pieces)

    def evaluate_array(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        snapped = snap_to_breakpoints(ts, self.breakpoints)
        values = np.zeros(ts.shape, dtype=np.complex128)
        for index, piece in enumerate(self.pieces):
            mask = piece.interval.contains_array(snapped)
            if np.any(mask):
                values[mask] = evaluate(piece.expr, snapped[mask], piece_index=index)
        return values

    def boundary_mismatches(self, tol: float = MISMATCH_TOL) -> List[BoundaryMismatch]:
        """Jumps larger than tol between pieces that share an endpoint."""
        order = sorted(range(len(self.pieces)), key=lambda i: self.pieces[i].interval.lo.fraction)
        mismatches = []
        for i, j in zip(order, order[1:]):
            left, right = self.pieces[i], self.pieces[j]
            if left.interval.hi != right.interval.lo:
                continue
            t = np.array([float(left.interval.hi)])
            jump = abs(
                evaluate(left.expr, t, piece_index=i)[0] - evaluate(right.expr, t, piece_index=j)[0]
            )
            if jump > tol:
                mismatches.append(BoundaryMismatch(t=float(t[0]), left_piece=i, right_piece=j, jump=jump))
        return mismatches

    def __str__(self) -> str:
        return "\n".join(str(piece) for piece in self.pieces)


def constant_expr(value: complex) -> Expr:
    """An expression tree for a complex constant (exact binary fractions)."""

    def real_expr(x: float) -> Expr:
        magnitude = Num(Fraction(abs(x)))
        return Neg(magnitude) if x < 0 else magnitude

    value = complex(value)
    if value.imag == 0:
        return real_expr(value.real)
    imaginary = BinOp("*", Num(Fraction(abs(value.imag))), ImagUnit())
    if value.imag < 0:
        imaginary = Neg(imaginary)
    if value.real == 0:
        return imaginary
    return BinOp("+", real_expr(value.real), imaginary)


@dataclass(frozen=True)
class StepFunction:
    """g = sum_j a_j chi_{[0,2pi) + 2 pi n_j}, stored as (a_j, n_j) with increasing n_j."""

    steps: Tuple[Tuple[complex, int], ...]

    def __post_init__(self):
        if not self.steps:
            raise InvalidPiecewiseError("a step function needs at least one step")
        widths = [n for _, n in self.steps]
        if any(b <= a for a, b in zip(widths, widths[1:])):
            raise InvalidPiecewiseError(f"step widths must be strictly increasing, got {widths}")

    @classmethod
    def from_polynomial(cls, p: LaurentPolynomial) -> StepFunction:
        if p.is_zero:
            return cls(steps=((0, 0),))
        return cls(steps=tuple((a, n) for n, a in p.terms))

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(n for _, n in self.steps)

    def polynomial(self) -> LaurentPolynomial:
        """sum_j a_j z^{n_j}, the single characteristic-chain polynomial of g."""
        return LaurentPolynomial((n, a) for a, n in self.steps)


def step_to_piecewise(s: StepFunction) -> PiecewiseFunction:
    pieces = tuple(
        Piece(interval=Interval.half_open(2 * n, 2 * (n + 1)), expr=constant_expr(a))
        for a, n in s.steps
    )
    return PiecewiseFunction(pieces=pieces)


def reverse_steps(s: StepFunction) -> StepFunction:
    """The mirrored step function sum conj(a_j) chi_{[0,2pi) + 2pi(n_max + n_min - n_j)}."""
    mirrored = reverse(s.polynomial())
    if mirrored.is_zero:
        return s
    return StepFunction.from_polynomial(mirrored)


def parse_piecewise(text: str) -> PiecewiseFunction:
    pieces = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        interval_text, separator, expr_text = line.partition(":")
        if not separator:
            raise PiecewiseFileError("expected '<interval> : <expression>'", line=number)
        try:
            interval = parse_interval(interval_text)
            expr = parse_expr(expr_text)
        except SetLiteralError as e:
            raise PiecewiseFileError(e.message, line=number) from e
        except ExpressionSyntaxError as e:
            raise PiecewiseFileError(e.message, line=number) from e
        pieces.append(Piece(interval=interval, expr=expr))
    if not pieces:
        raise PiecewiseFileError("no pieces defined", line=0)
    return PiecewiseFunction(pieces=tuple(pieces))


def load_piecewise(path: str | Path) -> PiecewiseFunction:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise PiecewiseFileError(f"cannot read {path}: {e}", line=0) from e
    return parse_piecewise(text)
