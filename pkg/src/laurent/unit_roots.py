import math

import numpy as np

from src.enums.frames import UnitRootKindEnum
from src.exceptions import InconsistencyError
from src.laurent.extrema import circle_extrema
from src.laurent.polynomial import LaurentPolynomial
from src.laurent.roots import roots
from src.log import logger
from src.models.laurent import UnitRootVerdict

DEFAULT_TOL = 1e-9
MARGINAL_FACTOR = 10.0


def unit_root_test(p: LaurentPolynomial, tol: float = DEFAULT_TOL) -> UnitRootVerdict:
    """
    Decide whether p vanishes somewhere on the unit circle.

    With m = min |p(e^{it})| and S = sum |a_j|: has_unit_root when m <= tol*S,
    no_unit_root with margin m/S when m >= 10*tol*S, marginal in between.
    Integer-coefficient polynomials are first tested at z = 1 and z = -1 in exact
    arithmetic. The verdict is cross-checked against the root finder: a root with
    ||r| - 1| <= tol forces has_unit_root, and contradicts a no_unit_root verdict.
    """
    if p.is_zero:
        return UnitRootVerdict(
            kind=UnitRootKindEnum.HAS_UNIT_ROOT, theta=0.0, min_modulus=0.0, exact=True
        )

    if p.has_integer_coefficients:
        for z, theta in ((1, 0.0), (-1, math.pi)):
            if p.exact_value_at(z) == 0:
                logger.debug(f"UNIT_ROOT_EXACT | polynomial={p} | z={z}")
                return UnitRootVerdict(
                    kind=UnitRootKindEnum.HAS_UNIT_ROOT,
                    theta=theta,
                    min_modulus=0.0,
                    exact=True,
                )

    extrema = circle_extrema(p)
    scale = p.l1_norm
    m = math.sqrt(extrema.min_sq)

    if m <= tol * scale:
        verdict = UnitRootVerdict(
            kind=UnitRootKindEnum.HAS_UNIT_ROOT, theta=extrema.argmin_theta, min_modulus=m
        )
    elif m >= MARGINAL_FACTOR * tol * scale:
        verdict = UnitRootVerdict(
            kind=UnitRootKindEnum.NO_UNIT_ROOT, margin=m / scale, min_modulus=m
        )
    else:
        verdict = UnitRootVerdict(kind=UnitRootKindEnum.MARGINAL, min_modulus=m)

    if p.span == 0:
        return verdict

    for root in roots(p):
        if abs(abs(root) - 1.0) > tol:
            continue
        if verdict.kind is UnitRootKindEnum.NO_UNIT_ROOT:
            raise InconsistencyError(
                f"root {root} of {p} lies on the unit circle but min |p| = {m!r}",
                polynomial=str(p),
            )
        if verdict.kind is UnitRootKindEnum.MARGINAL:
            theta = float(np.mod(np.angle(root), 2.0 * math.pi)) % (2.0 * math.pi)
            verdict = UnitRootVerdict(
                kind=UnitRootKindEnum.HAS_UNIT_ROOT, theta=theta, min_modulus=m
            )
        break

    logger.debug(f"UNIT_ROOT_TEST | polynomial={p} | kind={verdict.kind} | min_modulus={m:.3e}")
    return verdict
