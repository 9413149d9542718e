"""Human-readable notes attached to frame reports."""

from typing import List, Optional

from src.enums.frames import UnitRootKindEnum
from src.functions.piecewise import BoundaryMismatch
from src.laurent.polynomial import LaurentPolynomial
from src.laurent.unit_roots import unit_root_test
from src.models.intervals import Generator


def width_coefficient_note(index: int, gen: Generator, tol: float) -> Optional[str]:
    """
    Flag generators where sum_j n_j z^(j-1) has no unit roots while sum_j z^(n_j) has one.

    Reading the step-widths as coefficients is a tempting misreading of the frame-set
    criterion; the note records that the two polynomials lead to opposite verdicts.
    A zero width has no term in the coefficient reading, so generators with n_j = 0
    (a run of whole periods from the origin, for instance) get no note.
    """
    if 0 in gen.widths:
        return None
    width_poly = LaurentPolynomial((j, n) for j, n in enumerate(gen.widths))
    if unit_root_test(width_poly, tol).kind is not UnitRootKindEnum.NO_UNIT_ROOT:
        return None
    frame_poly = LaurentPolynomial.from_widths(gen.widths)
    verdict = unit_root_test(frame_poly, tol)
    if verdict.kind is not UnitRootKindEnum.HAS_UNIT_ROOT:
        return None
    return (
        f"generator {index} (base {gen.base}, widths {list(gen.widths)}): the step-widths read "
        f"as coefficients give {width_poly}, which has no unit roots, but the frame-set "
        f"polynomial {frame_poly} has a unit root at theta={verdict.theta:.6f}; "
        f"the verdict follows the frame-set polynomial"
    )


def zero_polynomial_note(index: int) -> str:
    return f"generator {index}: the chain polynomial is identically zero, so no lower frame bound exists"


def zero_chain_note(index: int, xis: List[float]) -> str:
    shown = ", ".join(f"{xi:.12g}" for xi in xis[:8])
    more = f" and {len(xis) - 8} more" if len(xis) > 8 else ""
    return f"generator {index}: zero characteristic chain at xi = {shown}{more}"


def marginal_note(m_sq: float, threshold: float) -> str:
    return (
        f"m_sq={m_sq:.3e} lies in the marginal band [{threshold:.3e}, {10 * threshold:.3e}); "
        f"tighten the tolerances or refine the xi grid to decide"
    )


def boundary_mismatch_notes(mismatches: List[BoundaryMismatch]) -> List[str]:
    return [f"warning: {mismatch}" for mismatch in mismatches]
