import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.enums.frames import KappaConventionEnum, VerdictEnum
from src.frames import analyze_continuous, analyze_frame_set
from src.functions import CallableWindow
from src.functions.expr import BinOp, Call, FUNCTIONS, ImagUnit, Neg, Num, PiConst, Pow, Var, format_expr
from src.functions.parser import parse_expr
from src.intervals import covers_line, decompose, normalize_set, reconstruct, translate_set
from src.laurent import LaurentPolynomial, circle_extrema, eval_circle_many, grid_extrema
from src.models.frames import GridParams
from src.models.intervals import Interval

KAPPA = 2 * math.pi
# g = 1 on a support wider than every drawn set
WIDE_ONE = CallableWindow(func=lambda ts: np.ones_like(ts), lo=-70 * math.pi, hi=70 * math.pi)


@st.composite
def support_sets(draw, max_parts=8, max_numerator=64, max_denominator=8):
    """Unions of up to eight intervals with endpoints p/q pi, |p| <= 64 and q <= 8."""
    endpoints = st.builds(
        Fraction, st.integers(-max_numerator, max_numerator), st.integers(1, max_denominator)
    )
    parts = []
    for _ in range(draw(st.integers(1, max_parts))):
        lo, hi = sorted(draw(st.lists(endpoints, min_size=2, max_size=2, unique=True)))
        parts.append(Interval.half_open(lo, hi))
    return normalize_set(parts)


numbers = st.builds(
    lambda digits, places: Num(Fraction(digits, 10**places)),
    st.integers(1, 999),
    st.integers(0, 2),
)
leaves = st.one_of(numbers, st.just(Var()), st.just(PiConst()), st.just(ImagUnit()))
expressions = st.recursive(
    leaves,
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from(["+", "-", "*", "/"]), children, children),
        st.builds(Pow, children, st.sampled_from([-3, -2, -1, 1, 2, 3, 4])),
        st.builds(Call, st.sampled_from(sorted(FUNCTIONS)), children),
    ),
    max_leaves=12,
)

polynomials = st.dictionaries(
    st.integers(0, 12), st.integers(-50, 50).map(lambda k: k / 10), min_size=1, max_size=8
).map(LaurentPolynomial).filter(lambda p: not p.is_zero)


@settings(max_examples=1000, deadline=None)
@given(support_sets())
def test_decomposition_reconstructs_the_set(E):
    d = decompose(E)
    assert reconstruct(d).same_set(E)
    base_length = sum(g.base.length.fraction for g in d.generators)
    assert covers_line(d) == (base_length == 2)


@settings(max_examples=500, deadline=None)
@given(support_sets())
def test_decomposition_conserves_measure(E):
    d = decompose(E)
    assert E.measure.fraction == sum(g.base.length.fraction * len(g.widths) for g in d.generators)


@settings(max_examples=500, deadline=None)
@given(support_sets())
def test_generator_translates_lie_in_the_set(E):
    d = decompose(E)
    bases = sorted(d.bases, key=lambda base: base.lo.fraction)
    assert bases[0].lo.fraction >= 0
    assert bases[-1].hi.fraction <= 2
    for left, right in zip(bases, bases[1:]):
        assert left.hi.fraction <= right.lo.fraction
    for g in d.generators:
        for translate in g.translates():
            lo, hi = translate.lo.fraction, translate.hi.fraction
            assert any(a <= lo and hi <= b for a, b in E.spans)


@settings(max_examples=200, deadline=None)
@given(support_sets(), st.integers(-3, 3))
def test_decomposition_commutes_with_translation(E, k):
    d = decompose(E)
    shifted = decompose(translate_set(E, k))
    assert [g.base for g in shifted.generators] == [g.base for g in d.generators]
    assert [g.widths for g in shifted.generators] == [
        tuple(n + k for n in g.widths) for g in d.generators
    ]


@settings(max_examples=100, deadline=None)
@given(support_sets(), st.integers(-3, 3))
def test_frame_set_verdict_is_translation_invariant(E, k):
    report = analyze_frame_set(E, kappa=KAPPA)
    shifted = analyze_frame_set(translate_set(E, k), kappa=KAPPA)
    assert shifted.verdict is report.verdict
    assert abs(shifted.m_sq - report.m_sq) <= 1e-12 * max(1.0, report.M_sq)
    assert abs(shifted.M_sq - report.M_sq) <= 1e-12 * max(1.0, report.M_sq)


@settings(max_examples=100, deadline=None)
@given(support_sets(), st.floats(0.1, 100.0))
def test_kappa_only_rescales_the_bounds(E, kappa):
    report = analyze_frame_set(E, kappa=KAPPA)
    rescaled = analyze_frame_set(E, kappa=kappa)
    assert rescaled.verdict is report.verdict
    assert rescaled.m_sq == report.m_sq
    assert rescaled.M_sq == report.M_sq
    if report.bounds is None:
        assert rescaled.bounds is None
        return
    assert rescaled.bounds[KappaConventionEnum.PAPER] == report.bounds[KappaConventionEnum.PAPER]
    calibrated = rescaled.bounds[KappaConventionEnum.CALIBRATED]
    assert calibrated.kappa == pytest.approx(kappa)
    assert calibrated.A0 == pytest.approx(kappa * report.m_sq, rel=1e-12)
    assert calibrated.B0 == pytest.approx(kappa * report.M_sq, rel=1e-12)


@settings(max_examples=1000, deadline=None)
@given(expressions)
def test_formatted_expressions_reparse(expr):
    assert parse_expr(format_expr(expr)) == expr


@settings(max_examples=500, deadline=None)
@given(polynomials)
def test_critical_point_extrema_agree_with_grid_search(p):
    exact = circle_extrema(p, cross_check=False)
    grid = grid_extrema(p)
    scale = p.l1_norm**2
    assert abs(exact.min_sq - grid.min_sq) <= 1e-8 * scale
    assert abs(exact.max_sq - grid.max_sq) <= 1e-8 * scale


@settings(max_examples=200, deadline=None)
@given(polynomials, st.lists(st.floats(0.0, 2 * math.pi), min_size=1, max_size=16))
def test_real_coefficients_give_conjugate_symmetric_moduli(p, thetas):
    thetas = np.array(thetas)
    forward = np.abs(eval_circle_many(p, thetas)) ** 2
    mirrored = np.abs(eval_circle_many(p, 2 * math.pi - thetas)) ** 2
    assert np.all(np.abs(forward - mirrored) <= 1e-12 * p.l1_norm**2)


@settings(max_examples=100, deadline=None)
@given(support_sets())
def test_constant_window_specializes_to_the_frame_set(E):
    grid = GridParams(xi_samples=16)
    continuous = analyze_continuous(WIDE_ONE, E, grid=grid, kappa=KAPPA)
    frame_set = analyze_frame_set(E, grid=grid, kappa=KAPPA)
    assert continuous.verdict is frame_set.verdict
    assert continuous.verdict is not VerdictEnum.MARGINAL
    tol = 1e-10 * max(1.0, frame_set.M_sq)
    assert abs(continuous.m_sq - frame_set.m_sq) <= tol
    assert abs(continuous.M_sq - frame_set.M_sq) <= tol
