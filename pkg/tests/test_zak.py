import math

import numpy as np
import pytest

from src.exceptions import CalibrationError, OracleError, PreconditionError, UnsupportedFunctionError
from src.frames import ANALYTIC_KAPPA
from src.functions import CallableWindow, Restricted, Scaled, ZakBumpWindow, parse_piecewise
from src.intervals import parse_set
from src.laurent import LaurentPolynomial, circle_extrema, eval_circle_many
from src.zak import (
    build_test_corpus,
    calibrate_kappa,
    commutation_check,
    frame_sum,
    frame_sum_bounds,
    norm_squared,
    translation_range,
    unitarity_check,
    zak_extrema,
    zak_transform,
)
from src.zak.transform import translate_range

TWO_PI = 2 * math.pi
SQRT_TWO_PI = math.sqrt(TWO_PI)
EXAMPLE6_SET = "[0,2pi) U [4pi,6pi) U [8pi,10pi)"


# --- grids ---
def test_zak_of_one_period_is_constant(chi_0_2pi):
    grid = zak_transform(chi_0_2pi, 32, 32)
    assert np.allclose(grid.values, 1 / SQRT_TWO_PI, rtol=0, atol=1e-14)
    assert grid.support_range == (0, 0)


def test_zak_of_two_periods(chi_0_4pi):
    grid = zak_transform(chi_0_4pi, 16, 64)
    expected = (1 + np.exp(1j * grid.w_points)) / SQRT_TWO_PI
    assert np.allclose(grid.values, expected[None, :], rtol=0, atol=1e-14)
    assert grid.support_range == (0, 1)


def test_zak_of_step_function_is_independent_of_t(g1_window):
    grid = zak_transform(g1_window, 64, 64)
    assert np.max(np.abs(grid.values - grid.values[0])) <= 1e-12
    p = LaurentPolynomial({0: 4, 1: 3, 3: 2})
    assert np.allclose(grid.values[0], eval_circle_many(p, grid.w_points) / SQRT_TWO_PI, atol=1e-13)


def test_grid_points(chi_0_2pi):
    grid = zak_transform(chi_0_2pi, 8, 16)
    assert (grid.n_t, grid.n_w) == (8, 16)
    assert grid.t_points[-1] == pytest.approx(TWO_PI * 7 / 8)
    assert grid.w_points[1] == pytest.approx(TWO_PI / 16)


def test_grid_too_small(chi_0_2pi):
    with pytest.raises(PreconditionError):
        zak_transform(chi_0_2pi, 4, 64)


def test_translate_range(chi_0_2pi, chi_0_4pi):
    assert translate_range(chi_0_2pi) == (0, 0)
    assert translate_range(chi_0_4pi) == (0, 1)


def test_unbounded_support_is_rejected():
    window = CallableWindow(func=np.cos, lo=0.0, hi=math.inf)
    with pytest.raises(UnsupportedFunctionError):
        zak_transform(window, 16, 16)


def test_homogeneity(g1_window):
    base = zak_transform(g1_window, 32, 32)
    scaled = zak_transform(Scaled(window=g1_window, factor=2 - 1j), 32, 32)
    assert np.max(np.abs(scaled.values - (2 - 1j) * base.values)) <= 1e-12


def test_linearity(g1_window, example6):
    combined = CallableWindow(
        func=lambda ts: g1_window(ts) + example6(ts), lo=0.0, hi=12 * math.pi
    )
    total = zak_transform(combined, 32, 32)
    separate = zak_transform(g1_window, 32, 32).values + zak_transform(example6, 32, 32).values
    assert np.max(np.abs(total.values - separate)) <= 1e-12


def test_csv_layout(chi_0_2pi):
    lines = zak_transform(chi_0_2pi, 64, 64).to_csv().splitlines()
    assert lines[0] == "t,w,re,im,abs2"
    assert len(lines) == 64 * 64 + 1
    t, w, re, im, abs2 = (float(x) for x in lines[1].split(","))
    assert (t, w, im) == (0, 0, 0)
    assert re == pytest.approx(1 / SQRT_TWO_PI)
    assert abs2 == pytest.approx(1 / TWO_PI)


# --- unitarity and commutation ---
def test_norm_squared(chi_0_4pi):
    assert norm_squared(chi_0_4pi) == pytest.approx(2 * TWO_PI)
    assert norm_squared(parse_piecewise("[0,2pi) : sin(t)")) == pytest.approx(math.pi)


def test_unitarity_of_indicator(chi_0_2pi):
    assert unitarity_check(chi_0_2pi, 256, 256) <= 1e-10


def test_unitarity_of_restricted_example_six(example6):
    window = Restricted(window=example6, support_set=parse_set(EXAMPLE6_SET))
    assert unitarity_check(window, 1024, 1024) <= 1e-6


@pytest.mark.parametrize(
    "fixture_name",
    ["example6", "sine", "one", "periodic_abs_sin", "chi_0_2pi", "chi_0_4pi", "g1_window"],
)
def test_unitarity_of_shipped_windows(request, fixture_name):
    window = request.getfixturevalue(fixture_name)
    assert unitarity_check(window, 1024, 1024) <= 1e-6


def test_unitarity_needs_a_nonzero_function():
    window = parse_piecewise("[0,2pi) : 0")
    with pytest.raises(OracleError):
        unitarity_check(window, 16, 16)


@pytest.mark.parametrize("m", range(-3, 4))
@pytest.mark.parametrize("n", range(-3, 4))
def test_time_frequency_shifts_become_phases(chi_0_2pi, g1_window, m, n):
    assert commutation_check(chi_0_2pi, m, n, 32, 32) <= 1e-12
    assert commutation_check(g1_window, m, n, 32, 32) <= 1e-12


# --- extrema ---
def test_zak_extrema_of_one_period(chi_0_2pi):
    extrema = zak_extrema(zak_transform(chi_0_2pi, 64, 64), parse_set("[0,2pi)"))
    assert extrema.min_abs2 == pytest.approx(1 / TWO_PI)
    assert extrema.max_abs2 == pytest.approx(1 / TWO_PI)


def test_zak_extrema_of_two_periods(chi_0_4pi):
    extrema = zak_extrema(zak_transform(chi_0_4pi, 64, 64), parse_set("[0,2pi)"))
    assert extrema.min_abs2 <= 1e-4
    assert extrema.max_abs2 == pytest.approx(2 / math.pi)


def test_zak_degenerates_on_the_offending_base():
    window = parse_piecewise("[3pi,7pi) : 1")
    grid = zak_transform(window, 64, 64)
    offending = zak_extrema(grid, parse_set("[0,pi)"))
    assert offending.min_abs2 <= 1e-4
    assert offending.max_abs2 == pytest.approx(4 / TWO_PI)


@pytest.mark.parametrize(
    "window_text, offending_base",
    [
        ("[3pi,7pi) : 1", "[0,pi)"),
        ("[5/2pi,7/2pi) : 1\n[4pi,11/2pi) : 1", "[1/2pi,3/2pi)"),
    ],
)
def test_zak_degeneration_survives_grid_doubling(window_text, offending_base):
    window = parse_piecewise(window_text)
    mask = parse_set(offending_base)
    coarse = zak_extrema(zak_transform(window, 1024, 1024), mask)
    fine = zak_extrema(zak_transform(window, 2048, 2048), mask)
    assert coarse.min_abs2 <= 1e-4
    assert fine.min_abs2 <= 0.5 * coarse.min_abs2 + 1e-20


def test_zak_extrema_of_step_function_follow_the_circle(g1_window):
    grid = zak_transform(g1_window, 64, 256)
    extrema = zak_extrema(grid, parse_set("[0,2pi)"))
    circle = circle_extrema(LaurentPolynomial({0: 4, 1: 3, 3: 2}))
    assert extrema.max_abs2 == pytest.approx(circle.max_sq / TWO_PI)
    assert circle.min_sq / TWO_PI - 1e-12 <= extrema.min_abs2 <= circle.min_sq / TWO_PI + 1e-2


def test_zak_extrema_with_empty_mask(chi_0_2pi):
    grid = zak_transform(chi_0_2pi, 8, 8)
    with pytest.raises(OracleError):
        zak_extrema(grid, parse_set("[1/8pi,1/5pi)"))


# --- frame sums ---
def test_translation_range(chi_0_2pi, chi_0_4pi):
    assert translation_range(chi_0_2pi, chi_0_2pi) == (0, 0)
    assert translation_range(chi_0_2pi, chi_0_4pi) == (-1, 0)


def test_frame_sum_of_indicator_is_two_pi(chi_0_2pi):
    for f in build_test_corpus(3, seed=7):
        value, reach = frame_sum(f, chi_0_2pi, 64)
        assert value == pytest.approx(TWO_PI, rel=1e-2)
        assert reach == 0


def test_frame_sums_detect_zak_zero(chi_0_4pi):
    near_zero, _ = frame_sum(ZakBumpWindow(order=4, center=math.pi), chi_0_4pi, 128)
    far_from_zero, _ = frame_sum(ZakBumpWindow(order=4, center=0.0), chi_0_4pi, 128)
    sharper, _ = frame_sum(ZakBumpWindow(order=9, center=math.pi), chi_0_4pi, 128)
    assert near_zero <= 0.1 * far_from_zero
    assert sharper <= 0.5 * near_zero


def test_frame_sum_bounds(chi_0_2pi):
    bounds = frame_sum_bounds(chi_0_2pi, build_test_corpus(4, seed=1), 64)
    assert bounds.A_est <= bounds.B_est
    assert bounds.spread <= 0.02
    assert bounds.test_count == 4
    assert bounds.m_max == 64


def test_frame_sum_bounds_need_tests(chi_0_2pi):
    with pytest.raises(OracleError):
        frame_sum_bounds(chi_0_2pi, [], 64)


def test_frame_sum_bounds_need_enough_modulations(chi_0_2pi):
    with pytest.raises(PreconditionError):
        frame_sum_bounds(chi_0_2pi, build_test_corpus(1, seed=1), 16)


def test_test_corpus_is_seeded():
    first = build_test_corpus(3, seed=42)
    again = build_test_corpus(3, seed=42)
    other = build_test_corpus(3, seed=43)
    assert [f.coefficients for f in first] == [f.coefficients for f in again]
    assert first[0].coefficients != other[0].coefficients
    assert len(first[0].coefficients) == 9


@pytest.mark.parametrize("count, support", [(0, (0.0, TWO_PI)), (2, (1.0, 1.0))])
def test_test_corpus_preconditions(count, support):
    with pytest.raises(PreconditionError):
        build_test_corpus(count, seed=1, support=support)


# --- calibration ---
def test_calibrated_kappa_is_two_pi():
    assert calibrate_kappa(m_max=64, tests=4) == pytest.approx(TWO_PI, rel=2e-2)


def test_calibration_is_scale_invariant():
    unit = calibrate_kappa(m_max=64, tests=4)
    assert calibrate_kappa(m_max=64, tests=4, scale=2.0) == pytest.approx(unit, rel=1e-12)


def test_calibrated_and_closed_form_conventions_differ_by_two_pi_squared():
    ratio = calibrate_kappa(m_max=64, tests=4) / ANALYTIC_KAPPA
    assert ratio == pytest.approx(TWO_PI**2, rel=3e-2)


def test_calibration_at_default_settings():
    kappa = calibrate_kappa()
    assert kappa == pytest.approx(TWO_PI, rel=2e-2)
    assert kappa / ANALYTIC_KAPPA == pytest.approx(TWO_PI**2, rel=3e-2)


def test_frame_sums_of_indicator_at_default_modulations(chi_0_2pi):
    bounds = frame_sum_bounds(chi_0_2pi, build_test_corpus(20, seed=20240611), 512)
    assert bounds.A_est == pytest.approx(TWO_PI, rel=1e-2)
    assert bounds.B_est == pytest.approx(TWO_PI, rel=1e-2)


def test_calibration_rejects_zero_window():
    with pytest.raises(CalibrationError):
        calibrate_kappa(m_max=64, tests=4, scale=0.0)
