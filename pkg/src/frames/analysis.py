"""
Frame decisions for step functions, frame sets and continuous windows.

Every analysis reduces to Laurent polynomials on the unit circle: one polynomial
for a step function, one per generator for a frame set (g = 1), and one per
generator and xi for a continuous g, built from the characteristic chain
{g(xi + 2 pi n_j)}. The family is a frame exactly when no chain polynomial
vanishes on the circle; m_sq and M_sq are the global inf and sup of |p|^2.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from src.enums.frames import (
    FunctionSpaceEnum,
    KappaConventionEnum,
    UnitRootKindEnum,
    VerdictEnum,
)
from src.exceptions import InconsistencyError
from src.frames.criteria import bounds_with_kappa
from src.frames.notes import (
    boundary_mismatch_notes,
    marginal_note,
    width_coefficient_note,
    zero_chain_note,
    zero_polynomial_note,
)
from src.functions.chains import chain, chain_poly, chain_values
from src.functions.piecewise import PiecewiseFunction, StepFunction
from src.functions.windows import Window
from src.intervals.decompose import covers_line, decompose
from src.laurent.extrema import circle_extrema
from src.laurent.polynomial import LaurentPolynomial, eval_circle, format_polynomial
from src.laurent.unit_roots import unit_root_test
from src.log import log_event, logger
from src.models.frames import (
    FrameReport,
    GeneratorEntry,
    GeneratorSummary,
    GridParams,
    Witness,
)
from src.models.intervals import BasicSupportSet, Generator, Interval
from src.models.laurent import CircleExtrema

GOLDEN_MAX_ITER = 200
WITNESS_FACTOR = 10.0

# a measured kappa, a callable producing one on demand, or None for the default calibration
KappaSource = Optional[float | Callable[[], float]]


def generator_entries(generators: Sequence[Generator]) -> List[GeneratorEntry]:
    return [GeneratorEntry(base=str(g.base), widths=list(g.widths)) for g in generators]


def _resolve_kappa(kappa: KappaSource) -> float:
    if callable(kappa):
        return kappa()
    if kappa is not None:
        return kappa
    from src.zak.calibration import calibrate_kappa

    return calibrate_kappa()


def _build_report(
    *,
    input: str,
    generators: Sequence[Generator],
    space: FunctionSpaceEnum,
    verdict: VerdictEnum,
    witnesses: List[Witness],
    m_sq: float,
    M_sq: float,
    summaries: List[GeneratorSummary],
    notes: List[str],
    kappa: KappaSource,
) -> FrameReport:
    bounds = None
    if verdict is VerdictEnum.FRAME:
        calibrated = _resolve_kappa(kappa)
        bounds = {
            KappaConventionEnum.PAPER: bounds_with_kappa(m_sq, M_sq, KappaConventionEnum.PAPER),
            KappaConventionEnum.CALIBRATED: bounds_with_kappa(
                m_sq, M_sq, KappaConventionEnum.CALIBRATED, calibrated
            ),
        }
    return FrameReport(
        input=input,
        decomposition=generator_entries(generators),
        space=space,
        verdict=verdict,
        witness=witnesses[0] if witnesses else None,
        witnesses=witnesses,
        m_sq=m_sq,
        M_sq=M_sq,
        bounds=bounds,
        condition_ratio=M_sq / m_sq if m_sq > 0 else None,
        per_generator=summaries,
        notes=notes,
    )


# --- Polynomial (xi-independent) analyses ---
def _polynomial_generator(
    index: int, gen: Generator, p: LaurentPolynomial, tol: float
) -> Tuple[GeneratorSummary, VerdictEnum, Optional[Witness], List[str]]:
    notes: List[str] = []
    if p.is_zero:
        summary = GeneratorSummary(
            index=index,
            base=str(gen.base),
            widths=list(gen.widths),
            polynomial=str(p),
            m_sq=0.0,
            M_sq=0.0,
            worst_theta=0.0,
            best_theta=0.0,
        )
        witness = Witness(generator_index=index, theta=0.0, value_sq=0.0, exact=True)
        return summary, VerdictEnum.NOT_FRAME, witness, [zero_polynomial_note(index)]

    verdict = unit_root_test(p, tol)
    extrema = circle_extrema(p)
    summary = GeneratorSummary(
        index=index,
        base=str(gen.base),
        widths=list(gen.widths),
        polynomial=str(p),
        m_sq=extrema.min_sq,
        M_sq=extrema.max_sq,
        worst_theta=extrema.argmin_theta,
        best_theta=extrema.argmax_theta,
        unit_root=verdict,
    )

    match verdict.kind:
        case UnitRootKindEnum.HAS_UNIT_ROOT:
            value_sq = abs(eval_circle(p, verdict.theta)) ** 2
            limit = (WITNESS_FACTOR * tol * p.l1_norm) ** 2
            if value_sq > limit:
                raise InconsistencyError(
                    f"unit-root witness theta={verdict.theta} of {p} re-evaluates to {value_sq:.3e}",
                    polynomial=str(p),
                )
            witness = Witness(
                generator_index=index, theta=verdict.theta, value_sq=value_sq, exact=verdict.exact
            )
            return summary, VerdictEnum.NOT_FRAME, witness, notes
        case UnitRootKindEnum.MARGINAL:
            threshold = (tol * p.l1_norm) ** 2
            notes.append(marginal_note(extrema.min_sq, threshold))
            witness = Witness(
                generator_index=index,
                theta=extrema.argmin_theta,
                value_sq=abs(eval_circle(p, extrema.argmin_theta)) ** 2,
            )
            return summary, VerdictEnum.MARGINAL, witness, notes
        case _:
            return summary, VerdictEnum.FRAME, None, notes


def _combine_verdicts(verdicts: Sequence[VerdictEnum]) -> VerdictEnum:
    if VerdictEnum.NOT_FRAME in verdicts:
        return VerdictEnum.NOT_FRAME
    if VerdictEnum.MARGINAL in verdicts:
        return VerdictEnum.MARGINAL
    return VerdictEnum.FRAME


def _polynomial_report(
    input: str,
    generators: Sequence[Generator],
    polynomials: Sequence[LaurentPolynomial],
    space: FunctionSpaceEnum,
    grid: GridParams,
    kappa: KappaSource,
    extra_notes: Callable[[int, Generator], Optional[str]] = lambda index, gen: None,
) -> FrameReport:
    summaries, verdicts, witnesses, notes = [], [], [], []
    for index, (gen, p) in enumerate(zip(generators, polynomials)):
        summary, verdict, witness, generator_notes = _polynomial_generator(
            index, gen, p, grid.unit_root_tol
        )
        summaries.append(summary)
        verdicts.append(verdict)
        notes.extend(generator_notes)
        if witness is not None and verdict is not VerdictEnum.FRAME:
            witnesses.append(witness)
        note = extra_notes(index, gen)
        if note:
            notes.append(note)

    verdict = _combine_verdicts(verdicts)
    # not_frame witnesses first
    witnesses.sort(key=lambda w: verdicts[w.generator_index] is not VerdictEnum.NOT_FRAME)
    return _build_report(
        input=input,
        generators=generators,
        space=space,
        verdict=verdict,
        witnesses=witnesses,
        m_sq=min(s.m_sq for s in summaries),
        M_sq=max(s.M_sq for s in summaries),
        summaries=summaries,
        notes=notes,
        kappa=kappa,
    )


def analyze_step(
    s: StepFunction, grid: GridParams = GridParams(), kappa: KappaSource = None
) -> FrameReport:
    """
    Frame decision for g = sum_j a_j chi_{[0,2pi) + 2 pi n_j}.

    The single chain polynomial p(z) = sum_j a_j z^{n_j} does not depend on xi:
    g is a frame window iff p has no unit roots, with m_sq = min |p|^2 and
    M_sq = max |p|^2 on the circle.
    """
    gen = Generator(base=Interval.half_open(0, 2), widths=s.widths)
    p = s.polynomial()
    report = _polynomial_report(
        input=f"steps {format_polynomial(p)}",
        generators=[gen],
        polynomials=[p],
        space=FunctionSpaceEnum.WHOLE_LINE,
        grid=grid,
        kappa=kappa,
    )
    log_event("ANALYZE_STEP", polynomial=p, verdict=report.verdict, m_sq=report.m_sq, M_sq=report.M_sq)
    return report


def analyze_frame_set(
    E: BasicSupportSet, grid: GridParams = GridParams(), kappa: KappaSource = None
) -> FrameReport:
    """
    Frame decision for chi_E: decompose E and test p_i(z) = sum_j z^{n_ij} per generator.
    """
    d = decompose(E)
    tol = grid.unit_root_tol
    report = _polynomial_report(
        input=str(E),
        generators=d.generators,
        polynomials=[LaurentPolynomial.from_widths(g.widths) for g in d.generators],
        space=FunctionSpaceEnum.WHOLE_LINE if covers_line(d) else FunctionSpaceEnum.SUBSPACE,
        grid=grid,
        kappa=kappa,
        extra_notes=lambda index, gen: width_coefficient_note(index, gen, tol),
    )
    log_event(
        "ANALYZE_FRAME_SET",
        set=E,
        generators=len(d.generators),
        verdict=report.verdict,
        m_sq=report.m_sq,
    )
    return report


# --- Continuous analyses ---
@dataclass
class _GeneratorScan:
    index: int
    widths: Tuple[int, ...]
    m_sq: float = math.inf
    worst_xi: float = 0.0
    worst_theta: float = 0.0
    M_sq: float = -math.inf
    best_xi: float = 0.0
    best_theta: float = 0.0
    zero_xis: List[float] = field(default_factory=list)

    def offer(self, xi: float, extrema: CircleExtrema) -> None:
        if extrema.min_sq < self.m_sq:
            self.m_sq, self.worst_xi, self.worst_theta = extrema.min_sq, xi, extrema.argmin_theta
        if extrema.max_sq > self.M_sq:
            self.M_sq, self.best_xi, self.best_theta = extrema.max_sq, xi, extrema.argmax_theta


def _chain_polynomial(widths: Sequence[int], values: np.ndarray) -> LaurentPolynomial:
    return LaurentPolynomial(zip(widths, values))


def _golden_refine(
    func: Callable[[float], float],
    xs: np.ndarray,
    fs: np.ndarray,
    k: int,
    xi_tol: float,
) -> Optional[Tuple[float, float]]:
    """
    Golden-section refinement of a sampled local minimum at index k.

    Tries the bracket (k-1, k, k+1) first and then the midpoints towards either
    neighbour, which resolves minima that fall between two tied samples.
    """
    last = len(xs) - 1

    def triples():
        if 0 < k < last:
            yield (xs[k - 1], fs[k - 1]), (xs[k], fs[k]), (xs[k + 1], fs[k + 1])
        for j in (k + 1, k - 1):
            if 0 <= j <= last:
                a, c = sorted((k, j))
                mid = 0.5 * (xs[a] + xs[c])
                yield (xs[a], fs[a]), (mid, func(mid)), (xs[c], fs[c])

    for (a, fa), (b, fb), (c, fc) in triples():
        if not (fb < fa and fb < fc):
            continue
        result = minimize_scalar(
            func,
            bracket=(a, b, c),
            method="golden",
            options={"xtol": xi_tol / (2.0 * max(abs(b), xi_tol)), "maxiter": GOLDEN_MAX_ITER},
        )
        return float(result.x), float(result.fun)
    return None


def _local_minima(fs: np.ndarray, count: int) -> List[int]:
    n = len(fs)
    candidates = []
    for k in range(n):
        left = fs[k - 1] if k > 0 else math.inf
        right = fs[k + 1] if k < n - 1 else math.inf
        if fs[k] <= left and fs[k] <= right:
            candidates.append(k)
    candidates.sort(key=lambda k: fs[k])
    return candidates[:count]


def _scan_generator(
    g: Window,
    index: int,
    widths: Tuple[int, ...],
    xis: np.ndarray,
    values: np.ndarray,
    zero_level: float,
    grid: GridParams,
    xi_tol: Optional[float],
) -> _GeneratorScan:
    scan = _GeneratorScan(index=index, widths=widths)
    cache = {}

    def extrema_at(xi: float) -> CircleExtrema:
        if xi not in cache:
            row = chain_values(g, widths, np.array([xi]))[0]
            if np.sum(np.abs(row)) <= zero_level:
                scan.zero_xis.append(float(xi))
            cache[xi] = circle_extrema(_chain_polynomial(widths, row), cross_check=False)
        return cache[xi]

    mins = np.empty(len(xis))
    maxs = np.empty(len(xis))
    for k, (xi, row) in enumerate(zip(xis, values)):
        if np.sum(np.abs(row)) <= zero_level:
            scan.zero_xis.append(float(xi))
        extrema = circle_extrema(_chain_polynomial(widths, row), cross_check=False)
        cache[float(xi)] = extrema
        mins[k], maxs[k] = extrema.min_sq, extrema.max_sq
        scan.offer(float(xi), extrema)

    if xi_tol is None:
        return scan

    for k in _local_minima(mins, grid.refine_minima):
        refined = _golden_refine(lambda x: extrema_at(x).min_sq, xis, mins, k, xi_tol)
        if refined is not None:
            scan.offer(refined[0], extrema_at(refined[0]))

    top = int(np.argmax(maxs))
    refined = _golden_refine(lambda x: -extrema_at(x).max_sq, xis, -maxs, top, xi_tol)
    if refined is not None:
        scan.offer(refined[0], extrema_at(refined[0]))

    scan.zero_xis = sorted(set(scan.zero_xis))
    return scan


def _continuous_report(
    g: Window,
    input: str,
    generators: Sequence[Generator],
    samples: Sequence[np.ndarray],
    space: FunctionSpaceEnum,
    grid: GridParams,
    kappa: KappaSource,
    refine: bool,
    notes: List[str],
) -> FrameReport:
    values = [chain_values(g, gen.widths, xis) for gen, xis in zip(generators, samples)]
    scale = max(float(np.max(np.abs(v))) if v.size else 0.0 for v in values)

    if scale == 0.0:
        first = generators[0]
        witness = Witness(
            generator_index=0, xi=float(samples[0][0]), theta=0.0, value_sq=0.0, zero_chain=True
        )
        summaries = [
            GeneratorSummary(
                index=i, base=str(gen.base), widths=list(gen.widths), m_sq=0.0, M_sq=0.0,
                worst_xi=float(xis[0]), worst_theta=0.0, best_xi=float(xis[0]), best_theta=0.0,
            )
            for i, (gen, xis) in enumerate(zip(generators, samples))
        ]
        notes.append(f"the window vanishes on every sampled chain of {first.base}")
        return _build_report(
            input=input, generators=generators, space=space, verdict=VerdictEnum.NOT_FRAME,
            witnesses=[witness], m_sq=0.0, M_sq=0.0, summaries=summaries, notes=notes, kappa=kappa,
        )

    threshold = grid.zero_tol * scale**2
    zero_level = math.sqrt(grid.zero_tol) * scale

    scans = []
    for index, (gen, xis, rows) in enumerate(zip(generators, samples, values)):
        xi_tol = None
        if refine:
            lo, hi = gen.base.bounds
            xi_tol = grid.xi_tol_factor * (hi - lo)
        scan = _scan_generator(g, index, tuple(gen.widths), xis, rows, zero_level, grid, xi_tol)
        scans.append(scan)
        logger.info(
            f"ANALYZE_CONTINUOUS | generator={index} | widths={list(gen.widths)} | "
            f"m_sq={scan.m_sq:.6e} | M_sq={scan.M_sq:.6e} | zero_chains={len(scan.zero_xis)}"
        )

    summaries = []
    for scan, gen in zip(scans, generators):
        # the scan used critical points only; rerun the worst chain with the grid cross-check
        worst = circle_extrema(chain_poly(chain(g, gen, scan.worst_xi)), cross_check=True)
        summaries.append(
            GeneratorSummary(
                index=scan.index,
                base=str(gen.base),
                widths=list(gen.widths),
                m_sq=worst.min_sq,
                M_sq=scan.M_sq,
                worst_xi=scan.worst_xi,
                worst_theta=worst.argmin_theta,
                best_xi=scan.best_xi,
                best_theta=scan.best_theta,
            )
        )
        if scan.zero_xis:
            notes.append(zero_chain_note(scan.index, scan.zero_xis))

    m_sq = min(s.m_sq for s in summaries)
    M_sq = max(s.M_sq for s in summaries)
    has_zero_chain = any(scan.zero_xis for scan in scans)

    if has_zero_chain or m_sq <= threshold:
        verdict = VerdictEnum.NOT_FRAME
    elif m_sq >= 10.0 * threshold:
        verdict = VerdictEnum.FRAME
    else:
        verdict = VerdictEnum.MARGINAL
        notes.append(marginal_note(m_sq, threshold))

    witnesses = []
    for scan, gen in zip(scans, generators):
        for xi in scan.zero_xis:
            p = chain_poly(chain(g, gen, xi))
            theta = circle_extrema(p, cross_check=False).argmin_theta
            witnesses.append(
                Witness(
                    generator_index=scan.index,
                    xi=xi,
                    theta=theta,
                    value_sq=abs(eval_circle(p, theta)) ** 2,
                    zero_chain=True,
                )
            )
    if verdict is not VerdictEnum.FRAME and not witnesses:
        worst = min(summaries, key=lambda s: s.m_sq)
        p = chain_poly(chain(g, generators[worst.index], worst.worst_xi))
        witnesses.append(
            Witness(
                generator_index=worst.index,
                xi=worst.worst_xi,
                theta=worst.worst_theta,
                value_sq=abs(eval_circle(p, worst.worst_theta)) ** 2,
            )
        )

    if verdict is VerdictEnum.NOT_FRAME:
        for witness in witnesses:
            if witness.value_sq > WITNESS_FACTOR * threshold:
                raise InconsistencyError(
                    f"not_frame witness xi={witness.xi}, theta={witness.theta} re-evaluates to "
                    f"{witness.value_sq:.3e}, above {WITNESS_FACTOR * threshold:.3e}",
                    generator=witness.generator_index,
                )

    return _build_report(
        input=input,
        generators=generators,
        space=space,
        verdict=verdict,
        witnesses=witnesses,
        m_sq=m_sq,
        M_sq=M_sq,
        summaries=summaries,
        notes=notes,
        kappa=kappa,
    )


def analyze_continuous(
    g: Window,
    E: BasicSupportSet,
    grid: GridParams = GridParams(),
    kappa: KappaSource = None,
) -> FrameReport:
    """
    Frame decision for g * chi_E with g continuous on the closure of every translate.

    Per generator, xi runs over grid.xi_samples uniform points of the closed base,
    both endpoints included. The lowest sampled local minima of xi -> min_sq(xi) and
    the highest maximum of max_sq(xi) are refined by golden-section search down to
    xi_tol = grid.xi_tol_factor * (base length). A zero characteristic chain at any
    evaluated xi decides not_frame on its own.
    """
    d = decompose(E)
    samples = [np.linspace(*gen.base.bounds, grid.xi_samples) for gen in d.generators]
    notes: List[str] = []
    if isinstance(g, PiecewiseFunction):
        notes.extend(boundary_mismatch_notes(g.boundary_mismatches()))

    report = _continuous_report(
        g,
        input=f"{E}",
        generators=d.generators,
        samples=samples,
        space=FunctionSpaceEnum.WHOLE_LINE if covers_line(d) else FunctionSpaceEnum.SUBSPACE,
        grid=grid,
        kappa=kappa,
        refine=True,
        notes=notes,
    )
    log_event(
        "ANALYZE_CONTINUOUS",
        set=E,
        verdict=report.verdict,
        m_sq=report.m_sq,
        M_sq=report.M_sq,
        witnesses=len(report.witnesses),
    )
    return report


def analyze_sampled(
    g: Window,
    widths: Sequence[int],
    xis: Sequence[float],
    grid: GridParams = GridParams(),
    kappa: KappaSource = None,
) -> FrameReport:
    """
    Chain test for a single set of step-widths over caller-supplied xi samples.

    This is the route for xi-sets that are not finite unions of intervals: no
    golden-section refinement is done, so the verdict only speaks for the samples.
    """
    xis = np.sort(np.mod(np.asarray(xis, dtype=np.float64), 2.0 * math.pi))
    widths = tuple(sorted(set(int(n) for n in widths)))
    gen = Generator(base=Interval.half_open(0, 2), widths=widths)
    report = _continuous_report(
        g,
        input=f"{len(xis)} sampled xi values, widths {list(widths)}",
        generators=[gen],
        samples=[xis],
        space=FunctionSpaceEnum.SUBSPACE,
        grid=grid,
        kappa=kappa,
        refine=False,
        notes=["verdict covers the sampled xi values only"],
    )
    log_event("ANALYZE_SAMPLED", samples=len(xis), verdict=report.verdict, m_sq=report.m_sq)
    return report
