import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossplit import (
    DegenerateSampleError,
    DomainError,
    Sample,
    SplitOutcome,
    build_crossover_curve,
    crossover_G,
    sample_crossover_eval,
    sample_split_point,
    split_function,
    standard_normal_model,
    theoretical_crossover,
    theoretical_crossover_derivative,
)

MODEL = standard_normal_model()

# sample strategies with enough spread that half-ulp boundary effects
# cannot blur the exact sup assertions
spread_samples = (
    st.lists(st.floats(-50, 50), min_size=2, max_size=64)
    .map(lambda xs: np.round(np.asarray(xs), 6))
    .filter(lambda xs: np.max(xs) - np.min(xs) > 1e-3)
)


def exact_split_oracle(xs):
    """Reference t_n in exact rational arithmetic over the binary values."""
    fs = sorted(Fraction(float(x)) for x in xs)
    ds = sorted(set(fs))
    best = None
    for k in range(len(ds) - 1):
        d, dn = ds[k], ds[k + 1]
        low = [x for x in fs if x <= d]
        up = [x for x in fs if x > d]
        icpt = Fraction(sum(low), len(low)) + Fraction(sum(up), len(up))
        if icpt - 2 * d >= 0:
            best = min(icpt / 2, dn)
    return None if best is None else float(best)


class TestSampleCrossoverEval:
    def test_symmetric_two_point(self):
        assert sample_crossover_eval(Sample.from_values([-1.0, 1.0]), 0.0) == 0.0

    def test_hand_values(self):
        s = Sample.from_values([0.0, 2.0])
        assert sample_crossover_eval(s, 0.5) == pytest.approx(1.0, abs=1e-15)
        assert sample_crossover_eval(s, 1.5) == pytest.approx(-1.0, abs=1e-15)

    def test_domain_errors(self):
        s = Sample.from_values([0.0, 2.0])
        with pytest.raises(DomainError):
            sample_crossover_eval(s, -0.1)
        with pytest.raises(DomainError):
            sample_crossover_eval(s, 2.0)  # F_n = 1 at the maximum


class TestCrossoverCurve:
    def test_single_segment(self):
        c = build_crossover_curve(Sample.from_values([0.0, 2.0]))
        assert c.breakpoints.tolist() == [0.0, 2.0]
        assert c.intercepts.tolist() == [2.0]
        assert c(0.0) == 2.0
        assert c(0.75) == pytest.approx(0.5, abs=1e-15)

    def test_three_point_intercepts(self):
        c = build_crossover_curve(Sample.from_values([-1.0, 0.0, 1.0]))
        assert c.intercepts.tolist() == pytest.approx([-0.5, 0.5], abs=1e-15)

    def test_rejects_degenerate(self):
        with pytest.raises(DegenerateSampleError):
            build_crossover_curve(Sample.from_values([3.0]))
        with pytest.raises(DegenerateSampleError):
            build_crossover_curve(Sample.from_values([2.0, 2.0, 2.0]))

    def test_domain_error_outside(self):
        c = build_crossover_curve(Sample.from_values([0.0, 2.0]))
        with pytest.raises(DomainError):
            c(2.0)
        with pytest.raises(DomainError):
            c(-0.5)

    def test_matches_direct_eval_on_grid(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            xs = rng.standard_normal(rng.integers(2, 200))
            if rng.integers(2):
                xs = np.round(xs, 1)  # force ties
            if np.unique(xs).size < 2:
                continue
            s = Sample.from_values(xs)
            c = build_crossover_curve(s)
            lo, hi = c.domain
            ts = rng.uniform(lo, hi, 1000)
            ts = ts[ts < hi]
            direct = np.array([sample_crossover_eval(s, t) for t in ts])
            assert np.max(np.abs(c(ts) - direct)) < 1e-12

    @given(spread_samples)
    def test_slope_is_exactly_minus_two(self, xs):
        s = Sample.from_values(xs)
        c = build_crossover_curve(s)
        # within one segment the difference quotient is exact
        for k in range(min(3, c.breakpoints.size - 1)):
            a = c.breakpoints[k]
            b = c.breakpoints[k + 1]
            mid = a + (b - a) / 2
            if mid == a or mid == b:
                continue
            assert (c(mid) - c(a)) == pytest.approx(-2.0 * (mid - a), rel=1e-12, abs=1e-12)


class TestSampleSplitPoint:
    def test_symmetric_two_point(self):
        est = sample_split_point(Sample.from_values([-1.0, 1.0]))
        assert est.crossed and est.outcome is SplitOutcome.FINITE
        assert est.t_n == 0.0
        assert est.n == 2

    def test_hand_midpoint(self):
        assert sample_split_point(Sample.from_values([0.0, 2.0])).t_n == 1.0

    def test_rejects_degenerate(self):
        with pytest.raises(DegenerateSampleError):
            sample_split_point(Sample.from_values([1.0]))
        with pytest.raises(DegenerateSampleError):
            sample_split_point(Sample.from_values([5.0, 5.0]))

    def test_sentinel_access_raises(self):
        from crossplit import SplitEstimate

        est = SplitEstimate(outcome=SplitOutcome.ALL_NEGATIVE, n=5)
        assert not est.crossed
        with pytest.raises(DomainError):
            est.t_n

    def test_matches_exact_rational_oracle(self):
        rng = np.random.default_rng(20260821)
        checked = 0
        for trial in range(300):
            n = int(rng.integers(2, 31))
            if trial % 3 == 0:
                xs = rng.integers(-6, 7, n).astype(float) / 4.0
            elif trial % 3 == 1:
                xs = rng.standard_normal(n)
            else:
                xs = np.round(rng.standard_normal(n), 2)
            if np.unique(xs).size < 2:
                continue
            got = sample_split_point(Sample.from_values(xs)).t_n
            want = exact_split_oracle(xs)
            assert got == pytest.approx(want, abs=1e-13, rel=1e-13)
            checked += 1
        assert checked > 250

    def test_tie_cancellation_boundary(self):
        # criterion value hits zero exactly through cancelling thirds
        xs = [0.0, 0.0, 1.0, 1.5, 1.5, 2.0]
        assert sample_split_point(Sample.from_values(xs)).t_n == 1.0
        assert exact_split_oracle(xs) == 1.0

    @given(spread_samples)
    @settings(max_examples=200)
    def test_supremum_properties(self, xs):
        s = Sample.from_values(xs)
        est = sample_split_point(s)
        assert est.crossed  # finite branch always taken for spread samples
        t = est.t_n
        c = build_crossover_curve(s)
        lo, hi = c.domain
        assert lo < t <= hi
        scale = max(1.0, abs(lo), abs(hi))
        # left limit is nonnegative
        assert c(math.nextafter(min(t, math.nextafter(hi, lo)), lo)) >= -1e-12 * scale
        # strictly beyond t the criterion is negative
        for u in np.linspace(t, hi, 13)[1:-1]:
            assert c(u) < 1e-12 * scale
        just_above = math.nextafter(t, math.inf)
        if just_above < hi:
            assert c(just_above) < 1e-12 * scale

    @given(spread_samples)
    @settings(max_examples=100)
    def test_first_segment_value_positive(self, xs):
        s = Sample.from_values(xs)
        c = build_crossover_curve(s)
        assert c(c.domain[0]) > 0.0

    @given(
        spread_samples,
        st.floats(0.125, 8.0),
        st.floats(-32.0, 32.0),
    )
    @settings(max_examples=100)
    def test_affine_invariance(self, xs, u, v):
        base = sample_split_point(Sample.from_values(xs)).t_n
        moved = sample_split_point(Sample.from_values(u * np.asarray(xs) + v)).t_n
        scale = max(1.0, abs(u * base + v))
        assert abs(moved - (u * base + v)) < 1e-12 * scale


class TestTheoreticalCrossover:
    def test_zero_at_origin(self):
        assert abs(theoretical_crossover(MODEL, 0.0)) < 1e-10

    def test_negative_past_split(self):
        assert theoretical_crossover(MODEL, 1.0) < 0.0

    def test_odd_symmetry(self):
        for t in (0.3, 1.0, 2.2):
            assert theoretical_crossover(MODEL, -t) == pytest.approx(
                -theoretical_crossover(MODEL, t), abs=1e-12
            )

    def test_domain_error_in_tail(self):
        with pytest.raises(DomainError):
            theoretical_crossover(MODEL, 40.0)
        with pytest.raises(DomainError):
            theoretical_crossover(MODEL, -40.0)


class TestTheoreticalDerivative:
    def test_slope_at_origin(self):
        # 4/pi - 2 for the standard normal
        d = theoretical_crossover_derivative(MODEL, 0.0)
        assert d == pytest.approx(4.0 / math.pi - 2.0, abs=1e-12)
        assert d == pytest.approx(-0.7268, abs=1e-3)

    def test_finite_difference_agreement(self):
        h = 1e-5
        for t in (-1.2, 0.0, 0.4, 1.7):
            fd = (
                theoretical_crossover(MODEL, t + h) - theoretical_crossover(MODEL, t - h)
            ) / (2 * h)
            assert theoretical_crossover_derivative(MODEL, t) == pytest.approx(
                fd, abs=1e-6
            )

    def test_even_symmetry(self):
        assert theoretical_crossover_derivative(MODEL, 0.5) == pytest.approx(
            theoretical_crossover_derivative(MODEL, -0.5), abs=1e-10
        )

    def test_domain_error_in_tail(self):
        with pytest.raises(DomainError):
            theoretical_crossover_derivative(MODEL, -40.0)


class TestSplitFunction:
    def test_value_at_half(self):
        assert split_function(MODEL, 0.5) == pytest.approx(2.0 / math.pi, abs=1e-10)

    def test_maximized_at_half(self):
        grid = np.arange(0.01, 1.0, 0.01)
        vals = [split_function(MODEL, p) for p in grid]
        assert grid[int(np.argmax(vals))] == pytest.approx(0.5)

    def test_symmetry(self):
        assert split_function(MODEL, 0.3) == pytest.approx(
            split_function(MODEL, 0.7), abs=1e-12
        )

    def test_domain_errors(self):
        for p in (0.0, 1.0):
            with pytest.raises(DomainError):
                split_function(MODEL, p)


class TestCrossoverG:
    def test_zero_at_half(self):
        assert abs(crossover_G(MODEL, 0.5)) < 1e-10

    def test_change_of_variables_identity(self):
        for p in np.linspace(0.02, 0.98, 25):
            q = MODEL.quantile(p)
            assert abs(crossover_G(MODEL, p) - theoretical_crossover(MODEL, q)) < 1e-9

    def test_negative_past_split(self):
        assert crossover_G(MODEL, 0.9) < 0.0

    def test_domain_errors(self):
        for p in (0.0, 1.0, -0.2, 1.3):
            with pytest.raises(DomainError):
                crossover_G(MODEL, p)
