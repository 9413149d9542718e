from enum import Enum


class VerdictEnum(str, Enum):
    """Outcome of a frame decision. `marginal` means the numerical margin is too thin to call."""

    FRAME = "frame"
    NOT_FRAME = "not_frame"
    MARGINAL = "marginal"

    def __str__(self):
        return self.value


class FunctionSpaceEnum(str, Enum):
    """
    The space the Gabor family is a frame for.
    L2(R) when the generator bases tile [0, 2pi), otherwise the invariant subspace L2(Omega).
    """

    WHOLE_LINE = "L2(R)"
    SUBSPACE = "L2(Omega)"

    def __str__(self):
        return self.value


class KappaConventionEnum(str, Enum):
    """Normalization constant used to turn m_sq / M_sq into absolute frame bounds."""

    PAPER = "paper"  # closed form kappa = 1 / (2 pi)
    CALIBRATED = "calibrated"  # kappa measured by the frame-sum oracle

    def __str__(self):
        return self.value


class UnitRootKindEnum(str, Enum):
    HAS_UNIT_ROOT = "has_unit_root"
    NO_UNIT_ROOT = "no_unit_root"
    MARGINAL = "marginal"

    def __str__(self):
        return self.value
