"""
Expression trees for the piecewise-function language.

Nodes are frozen dataclasses so that parsed trees compare structurally and can be
hashed. `evaluate` works on numpy arrays of t values and always returns complex128.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

import numpy as np

from src.exceptions import EvaluationError

FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "abs": np.abs,
    "sqrt": np.sqrt,
}

BINARY_OPERATORS = ("+", "-", "*", "/")


@dataclass(frozen=True)
class Num:
    """A non-negative rational literal (integers and finite decimals)."""

    value: Fraction


@dataclass(frozen=True)
class PiConst:
    pass


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr

    def __post_init__(self):
        if self.op not in BINARY_OPERATORS:
            raise ValueError(f"unknown binary operator {self.op!r}")


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    argument: Expr

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")


Expr = Union[Num, PiConst, ImagUnit, Var, Neg, BinOp, Pow, Call]


# --- Pretty printing ---
_PRECEDENCE_ADDITIVE = 1
_PRECEDENCE_MULTIPLICATIVE = 2
_PRECEDENCE_UNARY = 3
_PRECEDENCE_POWER = 4
_PRECEDENCE_ATOM = 5


def _precedence(expr: Expr) -> int:
    match expr:
        case BinOp(op="+" | "-"):
            return _PRECEDENCE_ADDITIVE
        case BinOp():
            return _PRECEDENCE_MULTIPLICATIVE
        case Neg():
            return _PRECEDENCE_UNARY
        case Pow():
            return _PRECEDENCE_POWER
        case _:
            return _PRECEDENCE_ATOM


def _format_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        # not a finite decimal; prints as a quotient
        return f"({value.numerator}/{value.denominator})"
    places = max(twos, fives)
    scaled = abs(value.numerator) * 10**places // value.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if value < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _wrap(expr: Expr, needs_parens: bool) -> str:
    text = format_expr(expr)
    return f"({text})" if needs_parens else text


def format_expr(expr: Expr) -> str:
    """Print an expression with the minimal parentheses needed to reparse it to the same tree."""
    match expr:
        case Num(value=value):
            return _format_number(value)
        case PiConst():
            return "pi"
        case ImagUnit():
            return "i"
        case Var():
            return "t"
        case Neg(operand=operand):
            return "-" + _wrap(operand, _precedence(operand) < _PRECEDENCE_UNARY)
        case BinOp(op=op, left=left, right=right):
            level = _precedence(expr)
            return (
                _wrap(left, _precedence(left) < level)
                + op
                + _wrap(right, _precedence(right) <= level)
            )
        case Pow(base=base, exponent=exponent):
            power = str(exponent) if exponent >= 0 else f"({exponent})"
            return _wrap(base, _precedence(base) < _PRECEDENCE_ATOM) + "^" + power
        case Call(name=name, argument=argument):
            return f"{name}({format_expr(argument)})"
    raise TypeError(f"not an expression node: {expr!r}")


# --- Evaluation ---
def _first_offender(ts: np.ndarray, mask: np.ndarray) -> float:
    if ts.ndim == 0:
        return float(ts)
    return float(ts[np.argmax(mask)])


def _evaluate(expr: Expr, ts: np.ndarray, piece_index: Optional[int]) -> np.ndarray | complex:
    match expr:
        case Num(value=value):
            return complex(float(value))
        case PiConst():
            return complex(math.pi)
        case ImagUnit():
            return 1j
        case Var():
            return ts.astype(np.complex128)
        case Neg(operand=operand):
            return -_evaluate(operand, ts, piece_index)
        case BinOp(op=op, left=left, right=right):
            a = _evaluate(left, ts, piece_index)
            b = _evaluate(right, ts, piece_index)
            match op:
                case "+":
                    return a + b
                case "-":
                    return a - b
                case "*":
                    return a * b
                case "/":
                    zero = np.broadcast_to(np.asarray(b) == 0, ts.shape)
                    if np.any(zero):
                        raise EvaluationError(
                            f"division by zero in {format_expr(expr)}",
                            t=_first_offender(ts, zero),
                            piece_index=piece_index,
                        )
                    return a / b
        case Pow(base=base, exponent=exponent):
            value = _evaluate(base, ts, piece_index)
            if exponent < 0:
                zero = np.broadcast_to(np.asarray(value) == 0, ts.shape)
                if np.any(zero):
                    raise EvaluationError(
                        f"zero raised to a negative power in {format_expr(expr)}",
                        t=_first_offender(ts, zero),
                        piece_index=piece_index,
                    )
            return value**exponent
        case Call(name=name, argument=argument):
            return FUNCTIONS[name](np.asarray(_evaluate(argument, ts, piece_index)))
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate(expr: Expr, ts: np.ndarray, piece_index: Optional[int] = None) -> np.ndarray:
    """
    Evaluate `expr` at every t in `ts`.

    Raises EvaluationError (with the offending t and piece index) on division by zero
    or a non-finite result.
    """
    ts = np.asarray(ts, dtype=np.float64)
    with np.errstate(all="ignore"):
        values = np.asarray(_evaluate(expr, ts, piece_index), dtype=np.complex128)
    values = np.array(np.broadcast_to(values, ts.shape), dtype=np.complex128)
    finite = np.isfinite(values)
    if not np.all(finite):
        raise EvaluationError(
            f"non-finite value of {format_expr(expr)}",
            t=_first_offender(ts, ~finite),
            piece_index=piece_index,
        )
    return values
