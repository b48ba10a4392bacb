"""Tests for the tail-gap function, its stationarity structure, and the solver."""

import math

import numpy as np
import pytest

import _oracles as orc
from normgap import (
    ArgumentError,
    CRITICAL_TARGET,
    DomainError,
    RangeError,
    constants,
    critical_ratio,
    critical_ratio_log_derivative,
    normal_pdf,
    solve_constants,
    tail_gap,
    tail_gap_derivative,
)
from normgap.extremal import REPORTED_MAX_DIGITS, REPORTED_ROOT_DIGITS


class TestTailGap:
    def test_at_zero(self):
        assert tail_gap(0.0) == 0.5

    def test_at_solved_maximizer(self, consts):
        assert tail_gap(consts.x_phi) == pytest.approx(0.5409365, abs=1e-6)

    def test_at_published_digits(self):
        # the peak is flat, so the published (slightly off) maximizer still
        # reproduces the published maximum to far better than 1e-6
        assert tail_gap(REPORTED_ROOT_DIGITS) == pytest.approx(REPORTED_MAX_DIGITS, abs=1e-6)
        assert tail_gap(REPORTED_ROOT_DIGITS) == pytest.approx(orc.GAP_AT_PUBLISHED, abs=1e-14)

    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
    def test_even_bitwise(self, x):
        assert tail_gap(x) == tail_gap(-x)

    def test_half(self):
        assert tail_gap(0.5) == pytest.approx(orc.GAP_HALF, abs=1e-15)

    def test_positive_on_grid(self):
        for x in np.linspace(-10.0, 10.0, 2001):
            assert tail_gap(float(x)) > 0.0
        for x in (10.0, 20.0, 40.0):
            assert tail_gap(x) > 0.0

    def test_unimodal_on_positive_axis(self, consts):
        xp = consts.x_phi
        rising = np.linspace(0.0, xp, 200)
        vals = [tail_gap(float(x)) for x in rising]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        falling = np.linspace(xp + 1e-6, 10.0, 2000)
        vals = [tail_gap(float(x)) for x in falling]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            tail_gap(math.nan)


class TestTailGapDerivative:
    def test_at_zero_is_density(self):
        assert tail_gap_derivative(0.0) == normal_pdf(0.0) == orc.PDF0

    def test_vanishes_at_maximizer(self, consts):
        assert abs(tail_gap_derivative(consts.x_phi)) <= 1e-10

    def test_at_one(self):
        assert tail_gap_derivative(1.0) == pytest.approx(orc.GAP_DERIV_1, abs=1e-12)

    def test_odd_extension(self):
        assert tail_gap_derivative(-1.0) == -tail_gap_derivative(1.0)

    def test_single_sign_change(self, consts):
        xs = np.linspace(1e-4, 10.0, 5000)
        signs = np.sign([tail_gap_derivative(float(x)) for x in xs])
        flips = np.nonzero(np.diff(signs))[0]
        assert len(flips) == 1
        lo, hi = xs[flips[0]], xs[flips[0] + 1]
        assert lo <= consts.x_phi <= hi

    def test_matches_finite_differences(self):
        h = 1e-6
        for x in np.linspace(0.01, 6.0, 240):
            x = float(x)
            fd = (tail_gap(x + h) - tail_gap(x - h)) / (2.0 * h)
            assert tail_gap_derivative(x) == pytest.approx(fd, abs=1e-6)

    def test_one_sided_at_zero(self):
        # the gap is even, hence not differentiable at 0; the returned value
        # is the x -> 0+ limit
        h = 1e-7
        fd = (tail_gap(h) - tail_gap(0.0)) / h
        assert tail_gap_derivative(0.0) == pytest.approx(fd, abs=1e-6)

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            tail_gap_derivative(math.nan)


class TestCriticalRatio:
    def test_at_one(self):
        assert critical_ratio(1.0) == pytest.approx(orc.RATIO_1, abs=1e-12)

    def test_published_digits_miss_the_threshold(self):
        # ratio at the published root digits sits 4.8e-7 below the threshold,
        # which is how the digit error in the published root shows up
        got = critical_ratio(REPORTED_ROOT_DIGITS)
        assert got == pytest.approx(orc.RATIO_AT_PUBLISHED, abs=1e-14)
        assert abs(got - CRITICAL_TARGET) > 4e-7

    def test_threshold_met_at_solved_root(self, consts):
        assert critical_ratio(consts.x_phi) == pytest.approx(CRITICAL_TARGET, abs=1e-7)

    def test_monotone(self):
        xs = np.geomspace(1e-4, 5.0, 400)
        vals = [critical_ratio(float(x)) for x in xs]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert critical_ratio(0.1) < critical_ratio(0.2) < critical_ratio(0.5) < critical_ratio(1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            critical_ratio(0.0)
        with pytest.raises(DomainError):
            critical_ratio(-1.0)
        with pytest.raises(DomainError):
            critical_ratio(math.nan)

    def test_overflow(self):
        with pytest.raises(RangeError):
            critical_ratio(60.0)


class TestLogDerivative:
    def test_zero_at_one_exactly(self):
        assert critical_ratio_log_derivative(1.0) == 0.0
        assert critical_ratio_log_derivative(1.0, form="expanded") == 0.0

    def test_at_two(self):
        assert critical_ratio_log_derivative(2.0) == pytest.approx(0.9, abs=1e-15)

    def test_at_half(self):
        assert critical_ratio_log_derivative(0.5) == pytest.approx(0.9, abs=1e-15)

    def test_forms_agree(self):
        for x in np.geomspace(1e-3, 5.0, 500):
            a = critical_ratio_log_derivative(float(x), form="simplified")
            b = critical_ratio_log_derivative(float(x), form="expanded")
            assert a == pytest.approx(b, abs=1e-12)

    def test_nonnegative_on_positive_axis(self):
        for x in np.geomspace(1e-3, 5.0, 500):
            v = critical_ratio_log_derivative(float(x))
            assert v >= 0.0
            if not math.isclose(x, 1.0):
                assert v > 0.0

    def test_negative_for_negative_x(self):
        for x in (-0.5, -1.0, -2.0):
            assert critical_ratio_log_derivative(x) <= 0.0

    def test_pole_and_bad_form(self):
        with pytest.raises(DomainError):
            critical_ratio_log_derivative(0.0)
        with pytest.raises(ArgumentError):
            critical_ratio_log_derivative(1.0, form="nope")


class TestSolver:
    def test_solved_root_digits(self, consts):
        # true root of the stated crossing; note the published tabulation's
        # trailing two digits disagree with the equation (see module docs)
        assert consts.x_phi == pytest.approx(orc.X_ROOT, abs=1e-10)

    def test_solved_max_digits(self, consts):
        assert consts.c_phi == pytest.approx(orc.C_MAX, abs=1e-12)
        assert consts.c_phi == pytest.approx(0.5409365, abs=1e-7)

    def test_target_value(self, consts):
        assert consts.target == pytest.approx(orc.TARGET, abs=1e-15)

    def test_lemma_precision_bracket(self, consts):
        # the six digits stated alongside the lemma are correct: 0.213105...
        assert 0.213105 <= consts.x_phi <= 0.213106
        assert 0.5409364 <= consts.c_phi <= 0.5409366

    def test_crossing_residual(self, consts):
        assert abs(critical_ratio(consts.x_phi) - consts.target) <= 1e-12

    def test_max_is_gap_at_root_bitwise(self, consts):
        assert consts.c_phi == tail_gap(consts.x_phi)

    def test_solve_tol_honored(self):
        for tol in (1e-6, 1e-9, 1e-12):
            c = solve_constants(tol)
            assert c.solve_tol <= tol
            assert abs(critical_ratio(c.x_phi) - c.target) <= 1e-12

    def test_deterministic(self):
        a = solve_constants(1e-12)
        b = solve_constants(1e-12)
        assert a == b

    def test_cached(self):
        assert constants() is constants()

    def test_tol_validation(self):
        for bad in (0.0, -1e-9, 1e-3, math.nan):
            with pytest.raises(ArgumentError):
                solve_constants(bad)
