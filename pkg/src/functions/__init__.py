from .expr import Expr, evaluate, format_expr
from .parser import parse_expr
from .windows import (
    Window,
    Restricted,
    Scaled,
    ModulatedTranslate,
    CallableWindow,
    TrigBumpWindow,
    ZakBumpWindow,
)
from .piecewise import (
    Piece,
    PiecewiseFunction,
    StepFunction,
    BoundaryMismatch,
    step_to_piecewise,
    reverse_steps,
    parse_piecewise,
    load_piecewise,
)
from .chains import CharacteristicChain, chain, chain_values, chain_poly

__all__ = [
    "Expr",
    "evaluate",
    "format_expr",
    "parse_expr",
    "Window",
    "Restricted",
    "Scaled",
    "ModulatedTranslate",
    "CallableWindow",
    "TrigBumpWindow",
    "ZakBumpWindow",
    "Piece",
    "PiecewiseFunction",
    "StepFunction",
    "BoundaryMismatch",
    "step_to_piecewise",
    "reverse_steps",
    "parse_piecewise",
    "load_piecewise",
    "CharacteristicChain",
    "chain",
    "chain_values",
    "chain_poly",
]
