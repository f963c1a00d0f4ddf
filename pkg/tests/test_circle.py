import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pshua.circle import (
    Arc,
    ArcDissection,
    S1,
    S3,
    SumSpec,
    _FactorEvaluator,
    circle_integral,
    classify,
    dirichlet_approx,
    major_measure,
)
from pshua.counting import RepQuery, count_hua
from pshua.psprimes import Gamma


class TestDirichlet:
    def test_exact_rational_comes_back_exact(self):
        r = dirichlet_approx(Fraction(3, 10), 10)
        assert (r.a, r.q, r.lam) == (3, 10, 0.0)

    def test_small_tau_keeps_q_one(self):
        r = dirichlet_approx(Fraction(1, 3), 2)
        assert (r.a, r.q) == (0, 1)
        assert r.lam == pytest.approx(1 / 3)

    def test_zero(self):
        assert dirichlet_approx(0.0, 1) == dirichlet_approx(Fraction(0), 1)
        r = dirichlet_approx(0.0, 1)
        assert (r.a, r.q, r.lam) == (0, 1, 0.0)

    def test_tau_validation(self):
        with pytest.raises(ValueError):
            dirichlet_approx(0.5, 0.5)

    @settings(max_examples=300, deadline=None)
    @given(
        alpha=st.floats(min_value=-10, max_value=10, allow_nan=False),
        tau=st.floats(min_value=1, max_value=10**7),
    )
    def test_lemma_conditions_always_hold(self, alpha, tau):
        r = dirichlet_approx(alpha, tau)
        assert math.gcd(r.a, r.q) == 1
        assert 1 <= r.q <= tau
        # compare exactly through Fractions to dodge float slop
        err = abs(Fraction(alpha) - Fraction(r.a, r.q))
        assert err <= Fraction(1, r.q) / Fraction(tau)

    def test_lemma_conditions_bulk_sweep(self):
        import random

        rng = random.Random(20260809)
        for _ in range(10**4):
            alpha = rng.uniform(-3, 3)
            tau = rng.uniform(1, 10**6)
            r = dirichlet_approx(alpha, tau)
            assert math.gcd(r.a, r.q) == 1
            assert 1 <= r.q <= tau
            assert abs(Fraction(alpha) - Fraction(r.a, r.q)) <= Fraction(1, r.q) / Fraction(tau)


class TestDissection:
    def test_build_geometry(self):
        d = ArcDissection.build(10**6, Fraction(1, 6))
        assert d.Q == 10  # floor((10**6)**(1/6))
        assert d.tau == pytest.approx(10**5)
        assert all(math.gcd(a.a, a.q) == 1 and 1 <= a.a <= a.q <= d.Q for a in d.arcs)

    def test_sigma_validation(self):
        with pytest.raises(ValueError):
            ArcDissection.build(100, Fraction(1, 5))
        with pytest.raises(ValueError):
            ArcDissection.build(100, Fraction(0))

    def test_exact_Q_at_power_boundary(self):
        # 2**18 has (2**18)**(1/6) = 8 exactly; float powering would waver
        d = ArcDissection.build(2**18, Fraction(1, 6))
        assert d.Q == 8

    def test_single_arc_measure(self):
        d = ArcDissection.build(32, Fraction(1, 6))  # Q = 1, tau ~ 17.9
        assert d.Q == 1
        assert major_measure(d) == pytest.approx(2 / d.tau)

    def test_two_arc_measure_disjoint(self):
        arcs = [Arc(1, 1, 1.0, 1 / 100), Arc(1, 2, 0.5, 1 / 200)]
        d = ArcDissection(N=251, sigma=Fraction(1, 6), Q=2, tau=100.0, arcs=arcs)
        assert major_measure(d) == pytest.approx(0.03)

    def test_measure_never_exceeds_bound(self):
        for N in (32, 251, 4096, 10**6):
            d = ArcDissection.build(N)
            assert major_measure(d) <= 2 * d.Q / d.tau + 1e-12


class TestClassify:
    def test_center_is_major(self):
        d = ArcDissection.build(10**6)
        assert classify(2 / 5, d) == (2, 5)
        assert classify(1.0, d) == (1, 1)

    def test_boundary_tie_is_major(self):
        d = ArcDissection.build(10**6)
        assert classify(0.5 + 1 / (2 * d.tau), d) == (1, 2)

    def test_midway_is_minor(self):
        d = ArcDissection.build(10**6)
        assert classify((1 / 3 + 1 / 2) / 2, d) is None

    def test_window_enforced(self):
        d = ArcDissection.build(10**6)
        with pytest.raises(ValueError):
            classify(-0.2, d)
        with pytest.raises(ValueError):
            classify(1.2, d)


class TestFullIntegral:
    def test_counts_representations(self, sieve):
        assert round(circle_integral(12, (S1, S1, S3), sieve).value.real) == 1
        assert round(circle_integral(13, (S1, S1, S3), sieve).value.real) == 2

    def test_single_factor_picks_prime_indicator(self, sieve):
        assert round(circle_integral(5, (S1,), sieve).value.real) == 1
        assert round(circle_integral(6, (S1,), sieve).value.real) == 0

    def test_refuses_below_bandwidth(self, sieve):
        with pytest.raises(ValueError):
            circle_integral(12, (S1, S1, S3), sieve, samples=10)

    def test_oversampling_changes_nothing(self, sieve):
        base = circle_integral(51, (S1, S1, S3), sieve)
        over = circle_integral(51, (S1, S1, S3), sieve, samples=base.samples + 37)
        assert over.value == pytest.approx(base.value, abs=1e-9)

    def test_matches_convolution_count_on_range(self, sieve):
        # both parities; the acceptance gate covers odd N up to 5000
        for N in range(10, 1001):
            ci = circle_integral(N, (S1, S1, S3), sieve).value
            assert abs(ci - count_hua(RepQuery(N, 3), sieve)) < 1e-8

    def test_weighted_factors(self, sieve):
        g = Gamma(9, 10)
        spec = (SumSpec("T1", g), SumSpec("T1", g), SumSpec("T3", g))
        ci = circle_integral(101, spec, sieve).value
        w = count_hua(RepQuery(101, 3, (g, g, g), weighted=True), sieve)
        assert ci.real == pytest.approx(w, rel=1e-9)


class TestArcIntegrals:
    def test_splitting_identity(self, sieve):
        N = 101
        d = ArcDissection.build(N)
        full = circle_integral(N, (S1, S1, S3), sieve).value
        major = circle_integral(N, (S1, S1, S3), sieve, domain="major", dissection=d)
        minor = circle_integral(N, (S1, S1, S3), sieve, domain="minor", dissection=d)
        err = major.error_estimate + minor.error_estimate + 1e-9
        assert abs(major.value + minor.value - full) <= 10 * err

    def test_unknown_domain(self, sieve):
        with pytest.raises(ValueError):
            circle_integral(10, (S1,), sieve, domain="nope")

    def test_evaluator_is_periodic(self, sieve):
        ev = _FactorEvaluator(S1, 200, sieve)
        # integer shifts cannot change the exact mod-1 phase reduction
        assert ev.at(0.3125) == ev.at(3.3125)
        assert ev.at(0.3125) == ev.at(-2.6875)

    def test_splitting_identity_other_sigma(self, sieve):
        N = 251
        d = ArcDissection.build(N, Fraction(1, 8))
        full = circle_integral(N, (S1, S1, S3), sieve).value
        major = circle_integral(N, (S1, S1, S3), sieve, domain="major", dissection=d)
        minor = circle_integral(N, (S1, S1, S3), sieve, domain="minor", dissection=d)
        err = major.error_estimate + minor.error_estimate + 1e-9
        assert abs(major.value + minor.value - full) <= 10 * err


def test_classify_consistent_with_dirichlet():
    import random

    d = ArcDissection.build(10**6)
    lo, hi = d.window
    rng = random.Random(31)
    for _ in range(500):
        alpha = rng.uniform(lo, hi)
        r = dirichlet_approx(alpha, d.tau)
        label = classify(alpha, d)
        if 1 <= r.a <= r.q <= d.Q:
            # a lemma-valid fraction with small q forces a major label
            assert label is not None
        if label is None:
            assert not (1 <= r.a <= r.q <= d.Q)


def test_sum_spec_validation():
    with pytest.raises(ValueError):
        SumSpec("S2")
    with pytest.raises(ValueError):
        SumSpec("T1")  # missing gamma
