import math
from typing import Optional, Sequence

from src.enums.frames import KappaConventionEnum, UnitRootKindEnum
from src.exceptions import PreconditionError
from src.laurent.polynomial import LaurentPolynomial
from src.laurent.unit_roots import DEFAULT_TOL, unit_root_test
from src.models.frames import FrameBounds

ANALYTIC_KAPPA = 1.0 / (2.0 * math.pi)


def is_root_sequence(
    values: Sequence[complex], widths: Sequence[int], tol: float = DEFAULT_TOL
) -> bool:
    """
    True iff sum_j values_j z^{widths_j} has a unit root.

    The zero polynomial counts as a root sequence; a marginal unit-root verdict does not.
    """
    if len(values) != len(widths):
        raise PreconditionError(
            f"{len(values)} values for {len(widths)} widths",
            values=len(values),
            widths=len(widths),
        )
    p = LaurentPolynomial(zip(widths, values))
    if p.is_zero:
        return True
    return unit_root_test(p, tol).kind is UnitRootKindEnum.HAS_UNIT_ROOT


def bounds_with_kappa(
    m_sq: float,
    M_sq: float,
    convention: KappaConventionEnum,
    kappa: Optional[float] = None,
) -> FrameBounds:
    """
    A0 = kappa * m_sq, B0 = kappa * M_sq.

    The paper convention is the closed form kappa = 1/(2 pi); the calibrated convention needs the
    kappa measured by the frame-sum oracle.
    """
    if not 0 <= m_sq <= M_sq:
        raise PreconditionError(f"need 0 <= m_sq <= M_sq, got m_sq={m_sq}, M_sq={M_sq}")
    match convention:
        case KappaConventionEnum.PAPER:
            kappa = ANALYTIC_KAPPA
        case KappaConventionEnum.CALIBRATED:
            if kappa is None:
                raise PreconditionError("the calibrated convention needs a measured kappa")
    return FrameBounds(
        convention=convention,
        kappa=kappa,
        m_sq=m_sq,
        M_sq=M_sq,
        A0=kappa * m_sq,
        B0=kappa * M_sq,
    )
