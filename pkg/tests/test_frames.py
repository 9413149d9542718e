import math

import numpy as np
import pytest

from src.enums.frames import FunctionSpaceEnum, KappaConventionEnum, VerdictEnum
from src.exceptions import PreconditionError
from src.frames import (
    ANALYTIC_KAPPA,
    analyze_continuous,
    analyze_frame_set,
    analyze_sampled,
    analyze_step,
    bounds_with_kappa,
    is_root_sequence,
)
from src.functions import CallableWindow, StepFunction
from src.intervals import parse_set
from src.laurent import LaurentPolynomial
from src.models.frames import GridParams

TWO_PI = 2 * math.pi
KAPPA = TWO_PI
EXAMPLE6_SET = "[0,2pi) U [4pi,6pi) U [8pi,10pi)"

G1 = StepFunction(steps=((4, 0), (3, 1), (2, 3)))
G2 = StepFunction(steps=((2, 0), (3, 2), (4, 3)))
G3 = StepFunction(steps=((1, 0), (-2, 1), (3, 3), (-5, 5)))
G4 = StepFunction(steps=((-5, 0), (3, 2), (-2, 4), (1, 5)))


def _never_called() -> float:
    raise AssertionError("kappa is only needed for frame verdicts")


# --- criteria ---
def test_root_sequence_on_consecutive_widths():
    assert is_root_sequence([-2, -1, 1], [0, 1, 2])


def test_not_a_root_sequence_on_gapped_widths():
    assert not is_root_sequence([-2, -1, 1], [0, 1, 3])


def test_zero_values_form_a_root_sequence():
    assert is_root_sequence([0, 0, 0], [0, 4, 9])


def test_bounds_need_ordered_extrema():
    with pytest.raises(PreconditionError):
        is_root_sequence([1, 2], [0])


def test_closed_form_bounds():
    bounds = bounds_with_kappa(1.0, 1.0, KappaConventionEnum.PAPER)
    assert bounds.kappa == ANALYTIC_KAPPA
    assert bounds.A0 == bounds.B0 == pytest.approx(1 / TWO_PI)
    assert bounds.condition_ratio == pytest.approx(1)


def test_calibrated_bounds():
    bounds = bounds_with_kappa(1.0, 1.0, KappaConventionEnum.CALIBRATED, KAPPA)
    assert bounds.A0 == bounds.B0 == pytest.approx(TWO_PI)


@pytest.mark.parametrize("convention", list(KappaConventionEnum))
def test_zero_lower_bound(convention):
    bounds = bounds_with_kappa(0.0, 4.0, convention, KAPPA)
    assert bounds.A0 == 0
    assert bounds.condition_ratio is None


def test_calibrated_bounds_need_kappa():
    with pytest.raises(PreconditionError):
        bounds_with_kappa(1.0, 1.0, KappaConventionEnum.CALIBRATED)


def test_bounds_reject_inverted_extrema():
    with pytest.raises(PreconditionError):
        bounds_with_kappa(2.0, 1.0, KappaConventionEnum.PAPER)


# --- step functions ---
def test_indicator_of_one_period_is_a_tight_frame():
    report = analyze_step(StepFunction(steps=((1, 0),)), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.m_sq == pytest.approx(1)
    assert report.M_sq == pytest.approx(1)
    assert report.bounds[KappaConventionEnum.PAPER].A0 == pytest.approx(1 / TWO_PI)
    assert report.bounds[KappaConventionEnum.CALIBRATED].B0 == pytest.approx(TWO_PI)
    assert report.condition_ratio == pytest.approx(1)


def test_two_adjacent_steps_are_not_a_frame():
    report = analyze_step(StepFunction(steps=((1, 0), (1, 1))), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.bounds is None
    assert report.witness.theta == pytest.approx(math.pi)
    assert report.witness.exact


@pytest.mark.parametrize("s", [G1, G2, G3, G4])
def test_worked_step_functions_are_frames(s):
    report = analyze_step(s, kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.space is FunctionSpaceEnum.WHOLE_LINE
    assert report.m_sq > 0


@pytest.mark.parametrize("s, mirrored", [(G1, G2), (G3, G4)])
def test_mirrored_step_functions_share_bounds(s, mirrored):
    a = analyze_step(s, kappa=KAPPA)
    b = analyze_step(mirrored, kappa=KAPPA)
    assert abs(a.m_sq - b.m_sq) <= 1e-10
    assert abs(a.M_sq - b.M_sq) <= 1e-10


def test_first_step_function_extrema():
    report = analyze_step(G1, kappa=KAPPA)
    assert report.M_sq == pytest.approx(81)
    assert report.per_generator[0].polynomial == "4 + 3*z + 2*z^3"


def test_zero_step_function_has_no_lower_bound():
    report = analyze_step(StepFunction(steps=((0, 0),)), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.m_sq == report.M_sq == 0
    assert any("identically zero" in note for note in report.notes)


# --- frame sets ---
def test_one_period_is_a_frame_set():
    report = analyze_frame_set(parse_set("[0,2pi)"), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.m_sq == pytest.approx(1)
    assert report.M_sq == pytest.approx(1)


def test_two_periods_are_not_a_frame_set():
    report = analyze_frame_set(parse_set("[0,4pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.witness.theta == math.pi
    assert report.witness.exact


@pytest.mark.parametrize("literal", ["[0,4pi)", "[0,6pi)", "[-2pi,2pi)"])
def test_whole_periods_from_the_origin_get_no_coefficient_note(literal):
    report = analyze_frame_set(parse_set(literal), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert not any("read as coefficients" in note for note in report.notes)


def test_shifted_block_is_not_a_frame_set():
    report = analyze_frame_set(parse_set("[3pi,7pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.space is FunctionSpaceEnum.WHOLE_LINE
    assert report.witness.generator_index == 0
    assert report.witness.theta == math.pi
    assert any("read as coefficients" in note for note in report.notes)


def test_half_open_pair_is_not_a_frame_set():
    report = analyze_frame_set(parse_set("(5/2pi,7/2pi] U (4pi,11/2pi]"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.space is FunctionSpaceEnum.SUBSPACE
    assert report.witness.generator_index == 1
    assert [entry.widths for entry in report.decomposition] == [[2], [1, 2]]
    assert any("generator 1" in note and "read as coefficients" in note for note in report.notes)


def test_subspace_frame_set():
    # one generator [0,pi) with widths {0, 2}: 1 + z^2 vanishes at theta = pi/2 and 3pi/2
    report = analyze_frame_set(parse_set("[0,pi) U [4pi,5pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert math.cos(report.witness.theta) == pytest.approx(0, abs=1e-6)
    report = analyze_frame_set(parse_set("[0,pi) U [5pi,11/2pi)"), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.space is FunctionSpaceEnum.SUBSPACE


# --- continuous windows ---
def test_sine_has_zero_chains_at_zero_and_pi(sine):
    report = analyze_continuous(sine, parse_set("[0,2pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    xis = [w.xi for w in report.witnesses]
    assert all(w.zero_chain for w in report.witnesses)
    assert any(abs(xi) < 1e-9 for xi in xis)
    assert any(abs(xi - math.pi) < 1e-6 for xi in xis)
    assert any("zero characteristic chain" in note for note in report.notes)


def test_sine_away_from_its_zeros_is_a_subspace_frame(sine):
    report = analyze_continuous(sine, parse_set("[1/4pi,3/4pi]"), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.space is FunctionSpaceEnum.SUBSPACE
    assert report.m_sq == pytest.approx(0.5, rel=1e-9)
    assert report.M_sq == pytest.approx(1.0, rel=1e-9)


def test_example_six_is_a_frame(example6):
    report = analyze_continuous(example6, parse_set(EXAMPLE6_SET), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.space is FunctionSpaceEnum.WHOLE_LINE
    assert report.m_sq >= 1
    assert not any(note.startswith("warning") for note in report.notes)

    # brute force over a 2001 x 2001 (xi, theta) grid of the factored chain polynomial
    xis = np.linspace(0, TWO_PI, 2001)[:, None]
    z2 = np.exp(2j * np.linspace(0, TWO_PI, 2001))[None, :]
    grid = np.abs((np.sin(xis) + 2 * z2) * (np.cos(xis) + 2 * z2)) ** 2
    assert report.m_sq == pytest.approx(grid.min(), rel=1e-3)
    assert report.M_sq == pytest.approx(grid.max(), rel=1e-3)


def test_constant_window_reproduces_the_frame_set_analysis(one):
    E = parse_set("[3pi,7pi)")
    grid = GridParams(xi_samples=32)
    continuous = analyze_continuous(one, E, grid=grid, kappa=KAPPA)
    frame_set = analyze_frame_set(E, grid=grid, kappa=KAPPA)
    assert continuous.verdict is frame_set.verdict is VerdictEnum.NOT_FRAME
    assert abs(continuous.m_sq - frame_set.m_sq) <= 1e-10
    assert abs(continuous.M_sq - frame_set.M_sq) <= 1e-10


def test_periodic_window_on_one_period(periodic_abs_sin):
    report = analyze_continuous(periodic_abs_sin, parse_set("[0,2pi)"), kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.m_sq == pytest.approx(0.25, rel=1e-9)
    assert report.M_sq == pytest.approx(1.0, rel=1e-9)


def test_periodic_window_on_shifted_block(periodic_abs_sin):
    report = analyze_continuous(periodic_abs_sin, parse_set("[3pi,7pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.witness.theta == pytest.approx(math.pi, abs=1e-6)


def test_vanishing_window_is_not_a_frame():
    zero = CallableWindow(func=lambda ts: np.zeros_like(ts), lo=0.0, hi=TWO_PI)
    report = analyze_continuous(zero, parse_set("[0,2pi)"), kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.witness.zero_chain


def test_sampled_chains(sine):
    report = analyze_sampled(sine, [0], [0.5, 1.0, 2.0], kappa=KAPPA)
    assert report.verdict is VerdictEnum.FRAME
    assert report.space is FunctionSpaceEnum.SUBSPACE
    assert report.m_sq == pytest.approx(math.sin(0.5) ** 2)
    report = analyze_sampled(sine, [0], [math.pi / 2, 0.0], kappa=_never_called)
    assert report.verdict is VerdictEnum.NOT_FRAME
    assert report.witness.xi == 0.0


def test_calibration_runs_lazily_for_frames():
    calls = []

    def kappa() -> float:
        calls.append(1)
        return KAPPA

    analyze_frame_set(parse_set("[0,4pi)"), kappa=kappa)
    assert calls == []
    report = analyze_frame_set(parse_set("[0,2pi)"), kappa=kappa)
    assert calls == [1]
    assert report.bounds[KappaConventionEnum.CALIBRATED].kappa == KAPPA


def test_generator_polynomials_echoed():
    report = analyze_frame_set(parse_set("[3pi,7pi)"), kappa=_never_called)
    assert [s.polynomial for s in report.per_generator] == ["1*z^2 + 1*z^3", "1*z + 1*z^2"]
    assert LaurentPolynomial.from_widths(report.decomposition[0].widths) == LaurentPolynomial({2: 1, 3: 1})
